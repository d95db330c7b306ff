#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nonarch/character_sum.hpp"
#include "nonarch/field.hpp"
#include "nonarch/manifold.hpp"
#include "nonarch/rng.hpp"

namespace nonarch {

/**
 * One ball piece of a locally constant test function: the summand
 * c * indicator(center + pi^level O^n) with c = coeff_re + i*coeff_im.
 */
struct StepPiece {
    std::vector<Scalar> center;
    std::int64_t level = 0;  // >= 0
    mpq_class coeff_re;
    mpq_class coeff_im;
};

/**
 * A finite sum of complex multiples of indicator functions of balls in K^n.
 * The support balls must be pairwise disjoint (checked at construction):
 * two balls in an ultrametric are disjoint exactly when some coordinate of
 * the difference of centers has valuation below the coarser of the two
 * levels.
 */
class StepFunction {
public:
    StepFunction(const FieldSpec& F, std::int64_t n,
                 std::vector<StepPiece> pieces);

    const FieldSpec& field() const { return field_; }
    std::int64_t n() const { return n_; }
    const std::vector<StepPiece>& pieces() const { return pieces_; }

private:
    FieldSpec field_;
    std::int64_t n_ = 1;
    std::vector<StepPiece> pieces_;
};

/**
 * Exact complex value stored over the basis {1, i}: value = one.value() +
 * i * ipart.value(), each part an exact unit-root combination.  For p = 2
 * the imaginary unit is itself a unit root of 2-power order, so it is
 * folded into `one` at insertion time and `ipart` stays empty; for odd p
 * the two parts live in linearly disjoint cyclotomic fields, so equality
 * and vanishing split componentwise.  Both invariants make equals()/
 * is_zero() exact.
 */
struct ComplexSum {
    CharacterSum one;
    CharacterSum ipart;

    static ComplexSum zero(const FieldSpec& F);

    /// add (re + i*im) * q^{-qexp} * zeta^root; denominators of re and im
    /// must be powers of the residue characteristic
    void accumulate(const mpq_class& re, const mpq_class& im,
                    const UnitRootExponent& root, std::int64_t qexp);

    std::complex<double> value() const;
    double magnitude_error() const;
    bool is_zero() const;
    bool equals(const ComplexSum& o) const;
};

/**
 * The Fourier transform of a step function at frequency xi, termwise in
 * closed form: a ball of level m centered at a contributes
 * q^{-m n} * psi(a . xi) when ord(pi^m xi_l) >= 1 for every coordinate l,
 * and zero otherwise (the inner integral is a full character sum against a
 * character that is nontrivial on the ball's direction group).  Exact.
 */
ComplexSum fourier_step(const StepFunction& f, const std::vector<Scalar>& xi);

/// (sum_i |c_i|^p q^{-level_i * n})^{1/p}; requires p >= 1 (DomainError)
double lp_norm(const StepFunction& f, const mpq_class& p);

/**
 * Deterministic generator for test functions: 1..4 pieces, levels <= 3,
 * centers drawn from the canonical residue representatives at the piece's
 * level, coefficients from {1,-1,2,-2,i,-i}; disjointness enforced by
 * rejection (on exhaustion the function simply keeps fewer pieces).
 */
StepFunction random_step_function(const FieldSpec& F, std::int64_t n,
                                  SplitMix64& rng);

struct TrialRow {
    std::int64_t trial = 0;
    double lhs = 0.0;
    double rhs_norm = 0.0;
    double ratio = 0.0;
};

/**
 * Evidence report for the extension/restriction inequality on one chart:
 * ratio = lhs / rhs_norm of the extremal trial, where lhs is the L^2 norm
 * of the restricted Fourier transform over the chart and rhs_norm the L^p
 * norm of the test function.  The measured maximum is a lower bound for
 * the true operator constant, not a proof of finiteness.
 */
struct RestrictionReport {
    mpq_class p;
    mpq_class p0;
    double lhs = 0.0;
    double rhs_norm = 0.0;
    double ratio = 0.0;
    std::int64_t trials = 0;
    std::vector<TrialRow> rows;

    /// columns: trial,lhs,rhs_norm,ratio; one row per trial plus a final
    /// row labeled "max" carrying the extremal trial's numbers
    std::string to_csv() const;
};

/**
 * Runs `trials` seeded random test functions through the chart: computes
 * lhs = (integral over the chart domain of |Rf|^2)^{1/2} exactly at a
 * sufficient locally-constant level, rhs_norm = lp_norm(f, p), and records
 * per-trial ratios.  p must satisfy 1 <= p <= p0 = 2nk/(2nk-1) unless
 * allow_above_p0 overrides the upper bound (DomainError otherwise); the
 * chart must certify finite type at most k on the whole domain.
 */
RestrictionReport restriction_check(const GraphChart& chart, std::int64_t k,
                                    const mpq_class& p, std::int64_t trials,
                                    std::uint64_t seed,
                                    bool allow_above_p0 = false);

}  // namespace nonarch
