#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonarch/character_sum.hpp"
#include "nonarch/phase.hpp"
#include "nonarch/series.hpp"

namespace nonarch {

inline constexpr std::int64_t kDefaultCosetCap = 10'000'000;

/**
 * Smallest level m >= 0 such that the integrand psi(y . f(x)) is constant on
 * cosets of pi^m O_K^d: m = max(0, 1 - ordpart) with ordpart the minimum over
 * components of ord(y_l) + min_{i>=1} ord(a_{l,i}).  (The character is
 * trivial exactly on pi O_K, hence the "1 -".)  Zero or constant components
 * contribute nothing; a wholly constant integrand has level 0.
 */
std::int64_t integral_level(const Phase& f, const Scalar& y);
std::int64_t integral_level(const VectorPhase& f, const std::vector<Scalar>& y);

/**
 * I(y) = int_{O_K} psi(y f(x)) |dx| as an exact CharacterSum: scale m and one
 * term per coset representative of O_K mod pi^m.  Any level_override >= the
 * minimal level yields an equal sum (refinement invariance); -1 means
 * minimal.  ResourceLimit if p^m exceeds cap.
 */
CharacterSum eval_integral(const Phase& f, const Scalar& y,
                           std::int64_t cap = kDefaultCosetCap,
                           std::int64_t level_override = -1, int threads = 1);

/**
 * int_{O_K^d} psi(y . f(x)) |dx| for an n-component map f of d variables and
 * y in K^n; exact CharacterSum of scale m*d over p^{m*d} coset
 * representatives.
 */
CharacterSum eval_integral_multi(const VectorPhase& f,
                                 const std::vector<Scalar>& y,
                                 std::int64_t cap = kDefaultCosetCap,
                                 std::int64_t level_override = -1,
                                 int threads = 1);

struct DecayRow {
    std::int64_t j = 0;           // shell |y| = q^j
    std::int64_t shell_size = 0;  // representatives of the shell at level S
    double sup_norm = 0.0;
    double error_bound = 0.0;
    double ratio = 0.0;  // sup_norm * q^{j/k}
    bool exact_zero = false;
};

struct DecayTable {
    std::int64_t k = 1;  // decay exponent 1/k used for the ratio column
    std::vector<DecayRow> rows;
    double max_ratio() const;
    /// CSV with header j,shell_size,sup_norm,error_bound,ratio (floats %.9g)
    std::string to_csv() const;
};

/**
 * Per-shell suprema of |I(y)| over |y| = q^j for j in [j_min, j_max].  The
 * shell is finite after truncation: |I(pi^{-j} u)| depends only on u modulo
 * pi^S, S = j + 1 + max(0, -min_{i>=1} ord a_i), because a coarser change of
 * u moves y(f(x) - a_0) by pi O_K where the character is trivial (the
 * constant coefficient contributes a global phase only).  Small shells are
 * evaluated exactly in the cyclotomic ring (certifying exact zeros); large
 * shells via a radix-p FFT (Q_p) or an axiswise group DFT (F_p((t))) over the
 * integer exponent histogram, with the float error reported per row.
 */
DecayTable decay_profile(const Phase& f, std::int64_t k, std::int64_t j_min,
                         std::int64_t j_max,
                         std::int64_t cap = kDefaultCosetCap, int threads = 1);

/**
 * Multivariate analogue over y = pi^{-j} v with v running over length-one
 * tuples mod pi^S: a streamed transform, outer tuple coordinates
 * (v_2..v_n) enumerated and the inner v_1 line handled by one FFT per tuple.
 * For the curve (x, x^2, x^3) over Q_p the translation x -> x+b acts on v by
 * a shell-preserving unipotent map fixing v_3 and translating v_2 by 3b v_3,
 * so v_2 runs over coset representatives of 3 v_3 (Z/p^S) only.
 */
DecayTable decay_profile(const VectorPhase& f, std::int64_t k,
                         std::int64_t j_min, std::int64_t j_max,
                         std::int64_t cap = kDefaultCosetCap, int threads = 1);

struct RogersResult {
    std::int64_t m = 0;      // f^{(j)} regular of degree m - j
    bool holds = false;      // max ratio attained before the last tested shell
    double max_ratio = 0.0;  // measured constant
    std::int64_t gauss_exponent = 0;  // ||f - f(0)|| = q^{gauss_exponent}
    std::string sp_note;              // sp number of f^{(m-1)}, as metadata
    DecayTable table;
};

/**
 * Decay-exponent check for the j-th derivative: m = j + regular_degree
 * (f^{(j)}), decay profile with exponent 1/m over shells [0, j_max], maximum
 * ratio reported as the measured constant.  DomainError over F_p((t)) (the
 * statement needs characteristic zero) and for constant f^{(j)}.
 */
RogersResult rogers_check(const Phase& f, std::int64_t j,
                          std::int64_t j_max = 6,
                          std::int64_t cap = kDefaultCosetCap,
                          int threads = 1);

}  // namespace nonarch
