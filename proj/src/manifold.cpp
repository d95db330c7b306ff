#include "nonarch/manifold.hpp"

#include <algorithm>

#include "nonarch/errors.hpp"
#include "nonarch/linalg.hpp"

namespace nonarch {

namespace {

// all multi-indices in d variables of exact total degree deg, lexicographic
void gen_exact_degree(std::int64_t d, std::int64_t deg,
                      std::vector<std::int64_t>& prefix,
                      std::vector<std::vector<std::int64_t>>& out) {
    if (static_cast<std::int64_t>(prefix.size()) == d - 1) {
        prefix.push_back(deg);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::int64_t e = 0; e <= deg; ++e) {
        prefix.push_back(e);
        gen_exact_degree(d, deg - e, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<std::int64_t>> multi_indices_exact(std::int64_t d,
                                                           std::int64_t deg) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> prefix;
    gen_exact_degree(d, deg, prefix, out);
    return out;
}

// indices with 1 <= |alpha| <= k, ordered by degree then lexicographically
std::vector<std::vector<std::int64_t>> multi_indices_upto(std::int64_t d,
                                                          std::int64_t k) {
    std::vector<std::vector<std::int64_t>> out;
    for (std::int64_t deg = 1; deg <= k; ++deg)
        for (auto& a : multi_indices_exact(d, deg)) out.push_back(a);
    return out;
}

void check_characteristic(const FieldSpec& F, std::int64_t k_max,
                          const char* who) {
    const std::int64_t ch = F.characteristic();
    if (ch != 0 && ch <= k_max)
        throw DomainError(std::string(who) +
                          ": residue characteristic must be 0 or exceed k");
}

// m(b + pi^s u) as a polynomial in u
MultiPhase window_poly(const MultiPhase& m, const std::vector<Scalar>& b,
                       std::int64_t s) {
    const FieldSpec& F = m.field();
    MultiPhase g = m.shifted(b);
    if (s == 0) return g;
    MultiPhase out(F, m.arity());
    for (const auto& [alpha, c] : g.terms()) {
        std::int64_t total = 0;
        for (std::int64_t e : alpha) total += e;
        out.set_coeff(alpha,
                      c * Scalar::uniformizer_pow(F, s * total));
    }
    return out;
}

// determinant of a small square matrix of polynomials, first-row expansion
MultiPhase poly_det(const std::vector<std::vector<MultiPhase>>& a,
                    const FieldSpec& F, std::size_t d) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    MultiPhase acc(F, d);
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c].is_zero()) continue;
        std::vector<std::vector<MultiPhase>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPhase> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[i][j]);
            sub.push_back(std::move(row));
        }
        MultiPhase term = a[0][c] * poly_det(sub, F, d);
        if (c % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

enum class Cover { AllNonzero, Witness, Undecided };

struct CoverWalker {
    const std::vector<MultiPhase>& minors;
    const FieldSpec& F;
    std::int64_t d;
    std::int64_t depth_cap;
    std::vector<Scalar> digits;  // residue representatives

    Cover walk(const std::vector<Scalar>& b, std::int64_t s) const {
        // exact witness: a center killing every minor kills the rank there
        bool all_zero_at_b = true;
        std::vector<Scalar> values;
        values.reserve(minors.size());
        for (const MultiPhase& m : minors) {
            values.push_back(m.eval(b));
            if (!values.back().is_zero()) all_zero_at_b = false;
        }
        if (all_zero_at_b) return Cover::Witness;
        // certification: some minor with a dominant constant term has
        // constant nonzero valuation on the whole coset b + pi^s O^d
        for (std::size_t i = 0; i < minors.size(); ++i) {
            if (values[i].is_zero()) continue;
            const MultiPhase g = window_poly(minors[i], b, s);
            const Valuation tail = g.gauss_norm_exponent_nonconstant();
            if (!tail.is_finite() || values[i].valuation() < tail)
                return Cover::AllNonzero;
        }
        if (s >= depth_cap) return Cover::Undecided;
        // subdivide into the p^d child cosets
        const std::size_t p = digits.size();
        std::size_t total = 1;
        for (std::int64_t v = 0; v < d; ++v) total *= p;
        bool undecided = false;
        const Scalar step = Scalar::uniformizer_pow(F, s);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::vector<Scalar> child = b;
            std::size_t rem = idx;
            for (std::int64_t v = 0; v < d; ++v) {
                child[static_cast<std::size_t>(v)] =
                    child[static_cast<std::size_t>(v)] +
                    step * digits[rem % p];
                rem /= p;
            }
            const Cover c = walk(child, s + 1);
            if (c == Cover::Witness) return Cover::Witness;
            if (c == Cover::Undecided) undecided = true;
        }
        return undecided ? Cover::Undecided : Cover::AllNonzero;
    }
};

// rows d^alpha f as polynomial vectors for 1 <= |alpha| <= k
std::vector<std::vector<MultiPhase>> derivative_rows(
    const GraphChart& chart, std::int64_t k) {
    std::vector<std::vector<MultiPhase>> rows;
    for (const auto& alpha : multi_indices_upto(chart.dim(), k)) {
        std::vector<MultiPhase> row;
        row.reserve(static_cast<std::size_t>(chart.ambient()));
        for (const MultiPhase& comp : chart.components())
            row.push_back(comp.derivative_multi(alpha));
        rows.push_back(std::move(row));
    }
    return rows;
}

// all n x n minors (choice of n rows) that are not identically zero
std::vector<MultiPhase> nonzero_minors(
    const std::vector<std::vector<MultiPhase>>& rows, std::int64_t n,
    const FieldSpec& F, std::int64_t d) {
    std::vector<MultiPhase> out;
    const std::int64_t R = static_cast<std::int64_t>(rows.size());
    if (R < n) return out;
    std::vector<std::int64_t> pick(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::vector<std::vector<MultiPhase>> sub;
        sub.reserve(static_cast<std::size_t>(n));
        for (std::int64_t i : pick) sub.push_back(rows[static_cast<std::size_t>(i)]);
        MultiPhase m = poly_det(sub, F, static_cast<std::size_t>(d));
        if (!m.is_zero()) out.push_back(std::move(m));
        // next combination
        std::int64_t i = n - 1;
        while (i >= 0 &&
               pick[static_cast<std::size_t>(i)] == R - n + i)
            --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < n; ++j)
            pick[static_cast<std::size_t>(j)] =
                pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

GraphChart::GraphChart(const FieldSpec& F, std::int64_t d, std::int64_t n,
                       std::vector<MultiPhase> components)
    : field_(F), d_(d), n_(n), components_(std::move(components)) {
    if (d_ < 1 || n_ < d_)
        throw DomainError("graph chart: need 1 <= d <= n");
    if (static_cast<std::int64_t>(components_.size()) != n_)
        throw DomainError("graph chart: component count differs from n");
    for (const MultiPhase& c : components_)
        if (static_cast<std::int64_t>(c.arity()) != d_)
            throw DomainError("graph chart: component arity differs from d");
    for (std::int64_t i = 0; i < d_; ++i) {
        const MultiPhase want = MultiPhase::variable(
            field_, static_cast<std::size_t>(d_), static_cast<std::size_t>(i));
        if (!(components_[static_cast<std::size_t>(i)] == want))
            throw DomainError(
                "graph chart: the first d components must be the coordinate "
                "projections");
    }
    for (std::int64_t i = d_; i < n_; ++i)
        for (const auto& [alpha, c] :
             components_[static_cast<std::size_t>(i)].terms())
            if (c.valuation() < 0)
                throw DomainError(
                    "graph chart: graph components need integral coefficients");
}

VectorPhase GraphChart::map() const {
    return VectorPhase(field_, static_cast<std::size_t>(d_), components_);
}

std::string TypeResult::str() const {
    switch (kind) {
        case Kind::Finite:
            return "type " + std::to_string(value);
        case Kind::NotFinite:
            return "NotFiniteType(" + std::to_string(value) + ")";
        default:
            return "Undecided(" + std::to_string(value) + ")";
    }
}

TypeResult type_at(const GraphChart& chart, const std::vector<Scalar>& x0,
                   std::int64_t k_max) {
    if (k_max < 1) throw DomainError("type_at: k_max must be >= 1");
    check_characteristic(chart.field(), k_max, "type_at");
    if (static_cast<std::int64_t>(x0.size()) != chart.dim())
        throw DomainError("type_at: x0 arity differs from chart dimension");
    for (const Scalar& c : x0)
        if (!c.is_zero() && c.valuation() < 0)
            throw DomainError("type_at: x0 lies outside the unit polydisk");
    std::vector<std::vector<Scalar>> rows;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        for (const auto& alpha : multi_indices_exact(chart.dim(), k)) {
            std::vector<Scalar> row;
            row.reserve(static_cast<std::size_t>(chart.ambient()));
            for (const MultiPhase& comp : chart.components())
                row.push_back(comp.derivative_multi(alpha).eval(x0));
            rows.push_back(std::move(row));
        }
        if (exact_rank(rows) == static_cast<std::size_t>(chart.ambient())) {
            TypeResult r;
            r.kind = TypeResult::Kind::Finite;
            r.value = k;
            return r;
        }
    }
    TypeResult r;
    r.kind = TypeResult::Kind::NotFinite;
    r.value = k_max;
    return r;
}

TypeResult type_on_chart(const GraphChart& chart, std::int64_t k_max,
                         std::int64_t depth_cap) {
    if (k_max < 1) throw DomainError("type_on_chart: k_max must be >= 1");
    check_characteristic(chart.field(), k_max, "type_on_chart");
    const FieldSpec& F = chart.field();
    const std::vector<Scalar> digits = coset_representatives(F, 1);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const auto rows = derivative_rows(chart, k);
        const std::vector<MultiPhase> minors =
            nonzero_minors(rows, chart.ambient(), F, chart.dim());
        if (minors.empty()) {
            // the rank is deficient at every point of the chart for this k
            if (k == k_max) {
                TypeResult r;
                r.kind = TypeResult::Kind::NotFinite;
                r.value = k_max;
                return r;
            }
            continue;
        }
        CoverWalker walker{minors, F, chart.dim(), depth_cap, digits};
        const std::vector<Scalar> origin(
            static_cast<std::size_t>(chart.dim()), Scalar::zero(F));
        const Cover cover = walker.walk(origin, 0);
        if (cover == Cover::AllNonzero) {
            TypeResult r;
            r.kind = TypeResult::Kind::Finite;
            r.value = k;
            return r;
        }
        if (cover == Cover::Undecided) {
            TypeResult r;
            r.kind = TypeResult::Kind::Undecided;
            r.value = depth_cap;
            return r;
        }
        // witness: some point needs more derivatives; try the next k
    }
    TypeResult r;
    r.kind = TypeResult::Kind::NotFinite;
    r.value = k_max;
    return r;
}

CharacterSum fourier_surface_measure(const GraphChart& chart,
                                     const std::vector<Scalar>& y,
                                     std::int64_t cap, int threads) {
    return eval_integral_multi(chart.map(), y, cap, -1, threads);
}

DecayTable surface_decay_profile(const GraphChart& chart, std::int64_t k,
                                 std::int64_t j_min, std::int64_t j_max,
                                 std::int64_t cap, int threads) {
    return decay_profile(chart.map(), k, j_min, j_max, cap, threads);
}

HomBasis homogeneous_basis(std::int64_t k, std::int64_t n,
                           const FieldSpec& F) {
    if (k < 1 || n < 1)
        throw DomainError("homogeneous_basis: need k >= 1 and n >= 1");
    const std::int64_t ch = F.characteristic();
    if (ch != 0 && ch <= k)
        throw DomainError(
            "homogeneous_basis: residue characteristic must be 0 or exceed k");
    HomBasis basis;
    basis.k = k;
    basis.n = n;
    basis.field = F;
    basis.monomials = multi_indices_exact(n, k);
    const std::int64_t dim = static_cast<std::int64_t>(basis.monomials.size());

    // multinomial coefficients k! / prod alpha_i!
    std::vector<mpz_class> multinom;
    multinom.reserve(static_cast<std::size_t>(dim));
    for (const auto& alpha : basis.monomials) {
        mpz_class m = 1;
        std::int64_t rest = k;
        for (std::int64_t e : alpha) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(rest),
                         static_cast<unsigned long>(e));
            m *= b;
            rest -= e;
        }
        multinom.push_back(m);
    }

    // echelon state for incremental independence
    std::vector<std::vector<Scalar>> echelon;
    std::vector<std::size_t> pivots;

    const std::int64_t base = k * n + 1;  // candidate entries in [0, k*n]
    __int128 total = 1;
    for (std::int64_t i = 0; i < n; ++i) total *= base;
    for (__int128 code = 0; code < total; ++code) {
        if (basis.dim() == dim) break;
        // decode, leftmost entry most significant (ascending lexicographic)
        std::vector<std::int64_t> xi_int(static_cast<std::size_t>(n));
        __int128 rem = code;
        for (std::int64_t i = n - 1; i >= 0; --i) {
            xi_int[static_cast<std::size_t>(i)] =
                static_cast<std::int64_t>(rem % base);
            rem /= base;
        }
        bool has_unit = false;
        for (std::int64_t e : xi_int)
            if (e % F.p() != 0) has_unit = true;
        if (!has_unit) continue;  // |xi| < 1
        // row of (xi . x)^k over the monomial order
        std::vector<Scalar> row;
        row.reserve(static_cast<std::size_t>(dim));
        for (std::int64_t mi = 0; mi < dim; ++mi) {
            Scalar entry = Scalar::one(F).times_integer(
                multinom[static_cast<std::size_t>(mi)]);
            const auto& alpha = basis.monomials[static_cast<std::size_t>(mi)];
            for (std::int64_t i = 0; i < n; ++i) {
                const std::int64_t e = alpha[static_cast<std::size_t>(i)];
                if (e == 0) continue;
                const Scalar x = Scalar::from_integer(
                    F, xi_int[static_cast<std::size_t>(i)]);
                if (x.is_zero()) {
                    entry = Scalar::zero(F);
                    break;
                }
                entry = entry * x.pow(e);
            }
            row.push_back(entry);
        }
        // reduce against the echelon rows
        std::vector<Scalar> red = row;
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            const std::size_t pc = pivots[r];
            if (red[pc].is_zero()) continue;
            const Scalar factor = red[pc] / echelon[r][pc];
            for (std::size_t j = 0; j < red.size(); ++j)
                red[j] = red[j] - factor * echelon[r][j];
        }
        std::ptrdiff_t piv = -1;
        Valuation best = Valuation::infinity();
        for (std::size_t j = 0; j < red.size(); ++j) {
            if (red[j].is_zero()) continue;
            if (piv < 0 || red[j].valuation() < best) {
                piv = static_cast<std::ptrdiff_t>(j);
                best = red[j].valuation();
            }
        }
        if (piv < 0) continue;  // dependent
        echelon.push_back(red);
        pivots.push_back(static_cast<std::size_t>(piv));
        std::vector<Scalar> xi;
        xi.reserve(static_cast<std::size_t>(n));
        for (std::int64_t e : xi_int) xi.push_back(Scalar::from_integer(F, e));
        basis.xi.push_back(std::move(xi));
        basis.rows.push_back(std::move(row));
    }
    if (basis.dim() != dim)
        throw PreconditionFailed(
            "homogeneous_basis: candidate pool exhausted before the dimension "
            "was reached");
    if (exact_det(basis.rows).is_zero())
        throw PreconditionFailed(
            "homogeneous_basis: certificate determinant vanished");
    return basis;
}

std::vector<Scalar> expand_in_basis(const HomBasis& basis,
                                    const std::vector<std::int64_t>& alpha) {
    if (static_cast<std::int64_t>(alpha.size()) != basis.n)
        throw PreconditionFailed("expand_in_basis: alpha arity mismatch");
    std::int64_t total = 0;
    for (std::int64_t e : alpha) {
        if (e < 0) throw PreconditionFailed("expand_in_basis: negative index");
        total += e;
    }
    if (total != basis.k)
        throw PreconditionFailed("expand_in_basis: |alpha| differs from k");
    const std::int64_t dim = basis.dim();
    std::ptrdiff_t target = -1;
    for (std::int64_t i = 0; i < dim; ++i)
        if (basis.monomials[static_cast<std::size_t>(i)] == alpha)
            target = static_cast<std::ptrdiff_t>(i);
    if (target < 0)
        throw PreconditionFailed("expand_in_basis: alpha not in monomial order");
    const FieldSpec& F = basis.field;
    // solve sum_i e_i row_i = delta_target, i.e. the transposed system
    std::vector<std::vector<Scalar>> a(
        static_cast<std::size_t>(dim),
        std::vector<Scalar>(static_cast<std::size_t>(dim), Scalar::zero(F)));
    std::vector<Scalar> b(static_cast<std::size_t>(dim), Scalar::zero(F));
    for (std::int64_t j = 0; j < dim; ++j) {
        for (std::int64_t i = 0; i < dim; ++i)
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                basis.rows[static_cast<std::size_t>(i)]
                          [static_cast<std::size_t>(j)];
        if (j == target) b[static_cast<std::size_t>(j)] = Scalar::one(F);
    }
    return exact_solve(std::move(a), std::move(b));
}

}  // namespace nonarch
