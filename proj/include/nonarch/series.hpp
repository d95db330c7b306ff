#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nonarch/phase.hpp"

namespace nonarch {

/// three-valued verdict for search procedures that may hit their depth cap
enum class Tri { Yes, No, Undecided };

std::string tri_str(Tri t);

/**
 * Certificate for the strongly principal (SP) property of f = sum a_i x^i on
 * O_K: a_1 != 0 and ord(a_j) > ord(a_1) for every j > 1.  On failure,
 * witness_j names an offending index (1 when the linear coefficient is
 * missing or not dominant against index j's tie).
 */
struct SpCertificate {
    bool sp = false;
    Valuation sp_valuation = Valuation::infinity();  // ord(a_1) when sp
    std::int64_t witness_j = 0;                      // failing index when !sp
    std::string reason;
};

SpCertificate is_sp(const Phase& f);

/// min over stored coefficient valuations (indices >= 1 when drop_constant);
/// infinity when no such coefficient exists.  ||f|| = q^{-result}.
Valuation gauss_norm_valuation(const Phase& f, bool drop_constant);

/// ord(a_1) of an SP phase; PreconditionFailed if f is not SP
Valuation sp_valuation(const Phase& f);

/**
 * Regularity data of a nonconstant phase: the minimal coefficient valuation
 * mu = min_{i>=1} ord(a_i), the largest index d attaining it, and c =
 * a_d^{-1}.  DomainError if f is constant.
 */
struct RegularityData {
    std::int64_t d = 0;
    Scalar c;
    Valuation min_ord = Valuation::infinity();
};

RegularityData regular_degree(const Phase& f);

/**
 * Result of the SP-number search: the least r >= 0 such that every window
 * rescaling f_{b,c} with b in O_K and 0 < |c| <= q^{-r} is SP.  `infinite`
 * marks a proof that no r works (the linear Taylor coefficient vanishes
 * somewhere, exactly or in the limit); `undecided` marks a depth-capped run.
 */
struct SpNumberResult {
    bool decided = false;
    bool infinite = false;
    std::int64_t r = -1;
    std::string note;
};

SpNumberResult sp_number(const Phase& f, std::int64_t r_max = 64, std::int64_t depth_cap = 24);

/**
 * Upper bound 1 + g with q^g = ||f - f(0)||, valid whenever |f'| >= 1
 * everywhere on O_K.  The hypothesis is certified here by running
 * verify_derivative_lower_bound(f, 1, 0); PreconditionFailed if that check
 * answers No (or cannot decide within depth_cap).
 */
std::int64_t sp_number_upper_bound(const Phase& f, std::int64_t depth_cap = 24);

/**
 * Root finding for SP phases.  An SP phase has a root in O_K iff
 * ord(a_0) >= ord(a_1), and then exactly one; Newton iteration refines it to
 * the requested uniformizer precision.  When no root exists, |f| is the
 * constant |a_0| on all of O_K and `value_valuation` reports ord(a_0).
 */
struct HenselResult {
    bool has_root = false;
    std::optional<Scalar> root;          // canonical representative mod pi^precision
    bool exact = false;                  // f(root) == 0 exactly, not just mod pi^precision
    std::int64_t precision = 0;          // root determined mod pi^precision
    Valuation value_valuation = Valuation::infinity();  // ord f(x) when rootless
};

HenselResult hensel_root(const Phase& f, std::int64_t precision = 64);

/// ord(f(x)) for SP f and integral x, exactly (DomainError for ord(x) < 0);
/// satisfies ord(f(x)) = sp_valuation + ord(x - d) in the root case and
/// ord(f(x)) = ord(a_0) in the rootless case
Valuation sp_norm_profile(const Phase& f, const Scalar& x);

/**
 * Branch-and-bound verification that ord(f^{(k)}(x)) <= bound for all x in
 * O_K (equivalently |f^{(k)}| >= q^{-bound} everywhere).  Yes and No are
 * exact; No carries a witness coset center.  Undecided means the coset
 * subdivision hit depth_cap without resolving.
 */
struct DerivativeBoundReport {
    Tri verdict = Tri::Undecided;
    std::optional<Scalar> witness;  // center of a violating coset when verdict == No
    std::int64_t depth_reached = 0;
};

DerivativeBoundReport verify_derivative_lower_bound(const Phase& f, std::int64_t k,
                                                    std::int64_t bound,
                                                    std::int64_t depth_cap = 24);

/**
 * Existence of a root of an arbitrary phase in O_K, by coset subdivision
 * with exact center checks and a Hensel lifting criterion.  Complete in
 * characteristic zero; in F_p((t)) an inseparable corner (derivative of a
 * squarefree factor vanishing identically) returns Undecided.
 */
Tri has_root_in_integers(const Phase& f, std::int64_t depth_cap = 64);

}  // namespace nonarch
