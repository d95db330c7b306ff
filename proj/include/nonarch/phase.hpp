#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nonarch/field.hpp"

namespace nonarch {

/**
 * Univariate polynomial phase f = sum a_i x^i with exact Scalar coefficients,
 * kept sparse and canonical: stored coefficients are nonzero (important in
 * characteristic p, where e.g. a formal derivative can kill terms).  At desk
 * scale degrees stay small; exponents are int64 for honesty, not capacity.
 */
class Phase {
public:
    explicit Phase(const FieldSpec& F) : field_(F) {}
    Phase(const FieldSpec& F, const std::vector<std::pair<std::int64_t, Scalar>>& coeffs);

    const FieldSpec& field() const { return field_; }
    const std::map<std::int64_t, Scalar>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    std::int64_t degree() const;  // -1 for the zero phase
    Scalar coeff(std::int64_t i) const;
    void set_coeff(std::int64_t i, const Scalar& a);  // drops zeros

    Scalar eval(const Scalar& x) const;

    Phase operator+(const Phase& o) const;
    Phase operator-(const Phase& o) const;
    Phase operator*(const Phase& o) const;
    Phase scaled(const Scalar& c) const;
    bool operator==(const Phase& o) const { return field_ == o.field_ && c_ == o.c_; }

    // k-th formal derivative (exact; in char p falling factorials may vanish)
    Phase derivative(std::int64_t k = 1) const;

    // Taylor expansion at b: returns Delta with f(b + s) = sum Delta[j] s^j.
    // Computed by binomial expansion, never by dividing by j! — valid in any
    // characteristic.
    std::vector<Scalar> taylor_at(const Scalar& b) const;
    // f(b + s) as a phase in s
    Phase shifted(const Scalar& b) const;

    // f_{b,c} = (1/c) f(b + c t): the rescaled window phase. c must be nonzero.
    Phase rescale_compose(const Scalar& b, const Scalar& c) const;

    // min over stored coefficient valuations (infinity for the zero phase);
    // ||f|| = q^{-gauss_norm_exponent}
    Valuation gauss_norm_exponent() const;
    // same, ignoring the constant coefficient: ||f - f(0)||
    Valuation gauss_norm_exponent_nonconstant() const;

    std::string str() const;

private:
    FieldSpec field_;
    std::map<std::int64_t, Scalar> c_;
};

/**
 * Multivariate polynomial over Scalar in d variables, exponent vectors as
 * keys.  Used for chart components and their derivative minors; sizes are
 * tiny (d <= 3, small degree), so a sorted map is plenty.
 */
class MultiPhase {
public:
    MultiPhase(const FieldSpec& F, std::size_t d) : field_(F), d_(d) {}
    MultiPhase(const FieldSpec& F, std::size_t d,
               const std::vector<std::pair<std::vector<std::int64_t>, Scalar>>& terms);

    static MultiPhase variable(const FieldSpec& F, std::size_t d, std::size_t which);
    static MultiPhase constant(const FieldSpec& F, std::size_t d, const Scalar& c);
    // embed a univariate phase as a polynomial in variable `which`
    static MultiPhase from_univariate(const Phase& f, std::size_t d, std::size_t which);

    const FieldSpec& field() const { return field_; }
    std::size_t arity() const { return d_; }
    const std::map<std::vector<std::int64_t>, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Scalar coeff(const std::vector<std::int64_t>& alpha) const;
    void set_coeff(const std::vector<std::int64_t>& alpha, const Scalar& a);

    Scalar eval(const std::vector<Scalar>& x) const;

    MultiPhase operator+(const MultiPhase& o) const;
    MultiPhase operator-(const MultiPhase& o) const;
    MultiPhase operator*(const MultiPhase& o) const;
    MultiPhase scaled(const Scalar& c) const;
    bool operator==(const MultiPhase& o) const {
        return field_ == o.field_ && d_ == o.d_ && t_ == o.t_;
    }

    // partial derivative d/dx_v
    MultiPhase derivative(std::size_t v) const;
    // d^alpha f
    MultiPhase derivative_multi(const std::vector<std::int64_t>& alpha) const;

    // f(b + s) as a polynomial in s (vector shift, binomial expansion)
    MultiPhase shifted(const std::vector<Scalar>& b) const;

    Valuation gauss_norm_exponent() const;
    Valuation gauss_norm_exponent_nonconstant() const;

    std::string str() const;

private:
    FieldSpec field_;
    std::size_t d_;
    std::map<std::vector<std::int64_t>, Scalar> t_;
};

/**
 * A vector of n multivariate phases over a common domain O_K^d — the shape of
 * the maps whose oscillatory integrals int psi(y . f(x)) we evaluate.
 */
struct VectorPhase {
    FieldSpec field;
    std::size_t d = 1;
    std::vector<MultiPhase> components;

    VectorPhase(const FieldSpec& F, std::size_t d_, std::vector<MultiPhase> comps);
    std::size_t n() const { return components.size(); }
};

}  // namespace nonarch
