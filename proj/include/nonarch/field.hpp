#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nonarch/errors.hpp"
#include "nonarch/fp_poly.hpp"
#include "nonarch/valuation.hpp"

namespace nonarch {

enum class FieldKind { Qp, FpT };

/**
 * A non-archimedean local field at desk scale: either Q_p or F_p((t)) for a
 * prime p.  Both have residue cardinality q = p and uniformizer pi (p resp.
 * t) with ord(pi) = 1; ramification never enters (e = 1 throughout).
 *
 * FieldSpec is a small value type carried by every Scalar so cross-field
 * arithmetic can be rejected instead of silently mixing conventions.
 */
class FieldSpec {
public:
    FieldSpec() : kind_(FieldKind::Qp), p_(2) {}
    FieldSpec(FieldKind kind, std::int64_t p);

    FieldKind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    std::int64_t residue_cardinality() const { return p_; }
    // characteristic of the field itself (0 for Q_p, p for F_p((t)))
    std::int64_t characteristic() const { return kind_ == FieldKind::Qp ? 0 : p_; }

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldKind kind_;
    std::int64_t p_;
};

FieldSpec make_field(FieldKind kind, std::int64_t p);
FieldSpec make_field(const std::string& kind, std::int64_t p);

/**
 * F_p((t)) scalar payload: t^exp * num/den with num(0) != 0, den(0) != 0,
 * den monic and gcd(num, den) = 1, so the t-adic valuation is just exp.
 * Zero is num == 0 (with exp = 0, den = 1).
 */
struct FpRatFunc {
    std::int64_t exp = 0;
    FpPoly num;
    FpPoly den;
};

/**
 * Exact element of Q_p or F_p((t)) at desk scale.
 *
 * Representation: for Q_p a GMP rational (arbitrary p-adic precision is free
 * because every element we touch IS a rational); for F_p((t)) a rational
 * function in normalized t-power form.  The absolute value |x| = q^{-ord x}
 * is never materialized as a float: use valuation().
 */
class Scalar {
public:
    Scalar() : field_(), v_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& F);
    static Scalar one(const FieldSpec& F);
    static Scalar from_integer(const FieldSpec& F, std::int64_t n);
    static Scalar from_mpq(const FieldSpec& F, const mpq_class& q);      // Q_p only
    static Scalar from_ratfunc(const FieldSpec& F, FpRatFunc f);        // F_p((t)) only
    static Scalar uniformizer(const FieldSpec& F);
    static Scalar uniformizer_pow(const FieldSpec& F, std::int64_t e);  // pi^e
    // Text format: Q_p "a" or "a/b"; F_p((t)) "num", "num/den", parens allowed,
    // e.g. "1+t^2", "t^2/(1+t)", "(1+t)/t".
    static Scalar parse(const FieldSpec& F, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    Valuation valuation() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByZero on o == 0
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(std::int64_t e) const;  // negative e needs nonzero base

    // multiply by a plain integer (binomial coefficients etc.); exact in both
    // characteristics since the integer is first mapped into the field
    Scalar times_integer(const mpz_class& n) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    // payload accessors (PreconditionFailed if the kind does not match)
    const mpq_class& rat() const;
    const FpRatFunc& ratfunc() const;

private:
    Scalar(FieldSpec F, mpq_class q) : field_(F), v_(std::move(q)) {}
    Scalar(FieldSpec F, FpRatFunc f) : field_(F), v_(std::move(f)) {}
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    std::variant<mpq_class, FpRatFunc> v_;
};

/**
 * Exponent r in [0,1) with denominator a power of p, standing for the unit
 * root e^{2 pi i r}.  These are the exact values of the fixed additive
 * character psi: trivial on the maximal ideal, nontrivial on the valuation
 * ring (psi(u) = e^{2 pi i {u/p}_p} on Q_p; constant-coefficient character
 * on F_p((t))).
 */
class UnitRootExponent {
public:
    UnitRootExponent() : r_(0) {}
    explicit UnitRootExponent(mpq_class r);

    const mpq_class& value() const { return r_; }
    bool is_trivial() const { return r_ == 0; }

    UnitRootExponent operator+(const UnitRootExponent& o) const;  // mod 1
    UnitRootExponent operator-() const;
    bool operator==(const UnitRootExponent& o) const { return r_ == o.r_; }
    bool operator!=(const UnitRootExponent& o) const { return r_ != o.r_; }
    bool operator<(const UnitRootExponent& o) const { return r_ < o.r_; }

    std::string str() const;

private:
    mpq_class r_;
};

// p-adic fractional part: the unique element of Z[1/p] in [0,1) congruent to
// x modulo Z_p.  Exposed for testing; character() composes it with the 1/p
// conductor shift.
mpq_class fractional_part_padic(const mpq_class& x, std::int64_t p);

// The pinned additive character psi evaluated at s, as a unit-root exponent.
UnitRootExponent character(const Scalar& s);

// Representatives of O_K / pi^m O_K in enumeration order (index i maps to its
// base-p digit expansion; over F_p((t)) digit j is the coefficient of t^j).
// ResourceLimit if p^m exceeds cap.
std::vector<Scalar> coset_representatives(const FieldSpec& F, std::int64_t m,
                                          std::int64_t cap = 10'000'000);

// p-adic valuation of a nonzero GMP integer / rational
std::int64_t mpz_ord_p(const mpz_class& n, std::int64_t p);
std::int64_t mpq_ord_p(const mpq_class& x, std::int64_t p);

}  // namespace nonarch
