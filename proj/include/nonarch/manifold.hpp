#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonarch/oscillatory.hpp"
#include "nonarch/phase.hpp"

namespace nonarch {

/**
 * A K-analytic manifold piece presented as one polynomial graph chart
 * x -> (x, g(x)) over the unit polydisk: the first d components are the
 * coordinate projections exactly (so the projection is an isometry and the
 * pushed-forward Haar measure of O_K^d is the surface measure, total mass 1),
 * and the remaining components carry integral coefficients so the image
 * stays inside O_K^n.
 */
class GraphChart {
public:
    GraphChart(const FieldSpec& F, std::int64_t d, std::int64_t n,
               std::vector<MultiPhase> components);

    const FieldSpec& field() const { return field_; }
    std::int64_t dim() const { return d_; }
    std::int64_t ambient() const { return n_; }
    const std::vector<MultiPhase>& components() const { return components_; }

    /// the chart as an integration phase map
    VectorPhase map() const;

private:
    FieldSpec field_;
    std::int64_t d_;
    std::int64_t n_;
    std::vector<MultiPhase> components_;
};

struct TypeResult {
    enum class Kind { Finite, NotFinite, Undecided };
    Kind kind = Kind::Undecided;
    // type k when Finite; the exhausted k_max when NotFinite; the search
    // depth when Undecided
    std::int64_t value = 0;
    bool finite() const { return kind == Kind::Finite; }
    std::string str() const;
};

/**
 * The type of the chart at x0: the least k <= k_max such that the derivative
 * vectors {d^alpha f(x0) : 0 < |alpha| <= k} span K^n (exact rank).  This
 * matches the dual formulation — rank n iff no nonzero v kills every
 * derivative.  NotFinite carries k_max when the span is still deficient
 * there.  DomainError if x0 is outside O_K^d or the residue characteristic
 * is <= k_max in positive characteristic (formal derivatives degenerate).
 */
TypeResult type_at(const GraphChart& chart, const std::vector<Scalar>& x0,
                   std::int64_t k_max);

/**
 * sup of type_at over the whole chart, decided cosetwise: each coset is
 * certified once some n x n minor of the derivative matrix has a dominant
 * constant term (locally constant nonzero valuation), a coset center where
 * every minor vanishes exactly witnesses failure of the current k, and an
 * all-zero minor list ends the search as NotFinite.  Cosets that stay
 * ambiguous to depth_cap yield Undecided.
 */
TypeResult type_on_chart(const GraphChart& chart, std::int64_t k_max,
                         std::int64_t depth_cap = 8);

/// mu-hat_S(y): exact Fourier transform of the normalized surface measure
CharacterSum fourier_surface_measure(const GraphChart& chart,
                                     const std::vector<Scalar>& y,
                                     std::int64_t cap = kDefaultCosetCap,
                                     int threads = 1);

/// per-shell suprema of |mu-hat_S| with ratios sup * q^{j/k}
DecayTable surface_decay_profile(const GraphChart& chart, std::int64_t k,
                                 std::int64_t j_min, std::int64_t j_max,
                                 std::int64_t cap = kDefaultCosetCap,
                                 int threads = 1);

/**
 * A basis of the homogeneous degree-k forms in n variables made of pure
 * powers (xi_i . x)^k with |xi_i| = 1, found by a deterministic lexicographic
 * search over integer vectors with entries in [0, k*n] and certified by an
 * exact nonzero determinant.
 */
struct HomBasis {
    std::int64_t k = 1;
    std::int64_t n = 1;
    FieldSpec field;
    std::vector<std::vector<Scalar>> xi;          // dim vectors in O_K^n
    std::vector<std::vector<std::int64_t>> monomials;  // row/column order
    std::vector<std::vector<Scalar>> rows;        // coefficients of (xi.x)^k
    std::int64_t dim() const { return static_cast<std::int64_t>(xi.size()); }
};

/// DomainError when the residue characteristic is positive and <= k
HomBasis homogeneous_basis(std::int64_t k, std::int64_t n, const FieldSpec& F);

/**
 * Exact coefficients e with x^alpha = sum_i e_i (xi_i . x)^k, |alpha| = k.
 * The basis certificate guarantees solvability.
 */
std::vector<Scalar> expand_in_basis(const HomBasis& basis,
                                    const std::vector<std::int64_t>& alpha);

}  // namespace nonarch
