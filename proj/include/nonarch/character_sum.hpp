#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "nonarch/field.hpp"

namespace nonarch {

/**
 * An exact element q^{-scale} * sum over terms of count * e^{2pi i r}, with
 * each exponent r a rational in [0,1) of p-power denominator — the value
 * class of oscillatory integrals here.  Counts are exact integers, so zero
 * can be certified in the cyclotomic ring Z[zeta_{p^s}] rather than guessed
 * from floats; floats appear only at the magnitude boundary, with an error
 * bound alongside.
 */
class CharacterSum {
public:
    CharacterSum() = default;  // empty sum over a default field (plumbing only)
    CharacterSum(const FieldSpec& F, std::int64_t scale);

    const FieldSpec& field() const { return field_; }
    std::int64_t scale_valuation() const { return scale_; }
    const std::map<UnitRootExponent, mpz_class>& terms() const { return terms_; }

    /// accumulate count * e^{2pi i r}; zero accumulations are dropped
    void add_term(const UnitRootExponent& r, const mpz_class& count = 1);

    /// smallest s >= 0 with all exponent denominators dividing p^s
    std::int64_t denominator_exponent() const;

    /**
     * Exact zero test in Z[zeta_{p^s}].  The relation module over the full
     * set {zeta^k : 0 <= k < p^s} is spanned by the p^{s-1} sums
     * sum_{i<p} zeta^{c + i p^{s-1}} = 0, so the element vanishes iff within
     * each such sibling class all p counts agree.
     */
    bool is_zero() const;

    /// complex value in doubles (exact magnitude zero when is_zero())
    std::complex<double> value() const;
    double magnitude() const;
    /// conservative bound on the float error of magnitude()
    double magnitude_error() const;

    CharacterSum operator+(const CharacterSum& o) const;
    CharacterSum operator-(const CharacterSum& o) const;

    /// exact equality as values (scales aligned exactly, difference tested
    /// in the cyclotomic ring)
    bool equals(const CharacterSum& o) const;

    std::string str() const;

private:
    FieldSpec field_;
    std::int64_t scale_ = 0;
    std::map<UnitRootExponent, mpz_class> terms_;
};

}  // namespace nonarch
