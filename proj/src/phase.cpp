#include "nonarch/phase.hpp"

#include <sstream>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

// exact binomial coefficient as an integer (reduced into the field by callers)
mpz_class binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

Phase::Phase(const FieldSpec& F, const std::vector<std::pair<std::int64_t, Scalar>>& coeffs)
    : field_(F) {
    for (const auto& [i, a] : coeffs) {
        if (i < 0) throw DomainError("phase exponents must be nonnegative");
        if (a.field() != F) throw DomainError("phase coefficient from a different field");
        if (a.is_zero()) continue;
        auto [it, fresh] = c_.emplace(i, a);
        if (!fresh) throw DomainError("duplicate exponent in phase coefficient list");
        (void)it;
    }
}

bool Phase::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

std::int64_t Phase::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

Scalar Phase::coeff(std::int64_t i) const {
    auto it = c_.find(i);
    return it == c_.end() ? Scalar::zero(field_) : it->second;
}

void Phase::set_coeff(std::int64_t i, const Scalar& a) {
    if (i < 0) throw DomainError("phase exponents must be nonnegative");
    if (a.is_zero()) {
        c_.erase(i);
    } else {
        if (a.field() != field_) throw DomainError("phase coefficient from a different field");
        c_[i] = a;
    }
}

Scalar Phase::eval(const Scalar& x) const {
    // Horner over the sparse exponent ladder, highest degree first
    Scalar acc = Scalar::zero(field_);
    std::int64_t e = 0;  // current implicit exponent of acc
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!acc.is_zero()) acc = acc * x.pow(e - it->first);
        e = it->first;
        acc = acc + it->second;
    }
    if (!acc.is_zero() && e > 0) acc = acc * x.pow(e);
    return acc;
}

Phase Phase::operator+(const Phase& o) const {
    if (field_ != o.field_) throw DomainError("phase arithmetic across fields");
    Phase r(field_);
    r.c_ = c_;
    for (const auto& [i, a] : o.c_) {
        auto it = r.c_.find(i);
        if (it == r.c_.end()) {
            r.c_.emplace(i, a);
        } else {
            Scalar s = it->second + a;
            if (s.is_zero())
                r.c_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

Phase Phase::operator-(const Phase& o) const { return *this + o.scaled(-Scalar::one(field_)); }

Phase Phase::operator*(const Phase& o) const {
    if (field_ != o.field_) throw DomainError("phase arithmetic across fields");
    Phase r(field_);
    for (const auto& [i, a] : c_)
        for (const auto& [j, b] : o.c_) {
            Scalar s = a * b;
            if (s.is_zero()) continue;
            auto it = r.c_.find(i + j);
            if (it == r.c_.end()) {
                r.c_.emplace(i + j, s);
            } else {
                Scalar t = it->second + s;
                if (t.is_zero())
                    r.c_.erase(it);
                else
                    it->second = t;
            }
        }
    return r;
}

Phase Phase::scaled(const Scalar& c) const {
    Phase r(field_);
    if (c.is_zero()) return r;
    for (const auto& [i, a] : c_) r.c_.emplace(i, a * c);
    return r;
}

Phase Phase::derivative(std::int64_t k) const {
    if (k < 0) throw DomainError("derivative order must be nonnegative");
    Phase r = *this;
    for (std::int64_t step = 0; step < k; ++step) {
        Phase d(field_);
        for (const auto& [i, a] : r.c_) {
            if (i == 0) continue;
            Scalar s = a.times_integer(mpz_class(static_cast<long>(i)));
            if (!s.is_zero()) d.c_.emplace(i - 1, s);
        }
        r = d;
        if (r.is_zero()) break;
    }
    return r;
}

std::vector<Scalar> Phase::taylor_at(const Scalar& b) const {
    std::int64_t deg = degree();
    std::vector<Scalar> delta(static_cast<std::size_t>(deg < 0 ? 1 : deg + 1),
                              Scalar::zero(field_));
    if (deg < 0) return delta;
    // Delta_j = sum_{i >= j} C(i, j) a_i b^{i-j}
    for (const auto& [i, a] : c_) {
        Scalar bp = Scalar::one(field_);  // b^{i-j}, built from j = i downward
        for (std::int64_t j = i; j >= 0; --j) {
            Scalar term = a.times_integer(binom(i, j)) * bp;
            delta[static_cast<std::size_t>(j)] = delta[static_cast<std::size_t>(j)] + term;
            if (j > 0) bp = bp * b;
        }
    }
    return delta;
}

Phase Phase::shifted(const Scalar& b) const {
    std::vector<Scalar> delta = taylor_at(b);
    Phase r(field_);
    for (std::size_t j = 0; j < delta.size(); ++j)
        if (!delta[j].is_zero()) r.c_.emplace(static_cast<std::int64_t>(j), delta[j]);
    return r;
}

Phase Phase::rescale_compose(const Scalar& b, const Scalar& c) const {
    if (c.is_zero()) throw DivisionByZero("rescale_compose requires c != 0");
    if (!b.is_zero() && b.valuation() < Valuation(0))
        throw DomainError("rescale_compose requires b in O_K");
    std::vector<Scalar> delta = taylor_at(b);
    Phase r(field_);
    Scalar cpow = c.inverse();  // c^{j-1}, starting at j = 0
    for (std::size_t j = 0; j < delta.size(); ++j) {
        Scalar beta = delta[j] * cpow;
        if (!beta.is_zero()) r.c_.emplace(static_cast<std::int64_t>(j), beta);
        cpow = cpow * c;
    }
    return r;
}

Valuation Phase::gauss_norm_exponent() const {
    Valuation m = Valuation::infinity();
    for (const auto& [i, a] : c_) m = min(m, a.valuation());
    return m;
}

Valuation Phase::gauss_norm_exponent_nonconstant() const {
    Valuation m = Valuation::infinity();
    for (const auto& [i, a] : c_)
        if (i >= 1) m = min(m, a.valuation());
    return m;
}

std::string Phase::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, a] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << a.str() << ")";
        if (i == 1)
            os << "*x";
        else if (i > 1)
            os << "*x^" << i;
    }
    return os.str();
}

MultiPhase::MultiPhase(const FieldSpec& F, std::size_t d,
                       const std::vector<std::pair<std::vector<std::int64_t>, Scalar>>& terms)
    : field_(F), d_(d) {
    for (const auto& [alpha, a] : terms) set_coeff(alpha, a);
}

MultiPhase MultiPhase::variable(const FieldSpec& F, std::size_t d, std::size_t which) {
    MultiPhase r(F, d);
    std::vector<std::int64_t> alpha(d, 0);
    alpha.at(which) = 1;
    r.t_.emplace(alpha, Scalar::one(F));
    return r;
}

MultiPhase MultiPhase::constant(const FieldSpec& F, std::size_t d, const Scalar& c) {
    MultiPhase r(F, d);
    if (!c.is_zero()) r.t_.emplace(std::vector<std::int64_t>(d, 0), c);
    return r;
}

MultiPhase MultiPhase::from_univariate(const Phase& f, std::size_t d, std::size_t which) {
    MultiPhase r(f.field(), d);
    for (const auto& [i, a] : f.coeffs()) {
        std::vector<std::int64_t> alpha(d, 0);
        alpha.at(which) = i;
        r.t_.emplace(alpha, a);
    }
    return r;
}

Scalar MultiPhase::coeff(const std::vector<std::int64_t>& alpha) const {
    auto it = t_.find(alpha);
    return it == t_.end() ? Scalar::zero(field_) : it->second;
}

void MultiPhase::set_coeff(const std::vector<std::int64_t>& alpha, const Scalar& a) {
    if (alpha.size() != d_) throw DomainError("exponent vector arity mismatch");
    for (std::int64_t e : alpha)
        if (e < 0) throw DomainError("phase exponents must be nonnegative");
    if (a.is_zero()) {
        t_.erase(alpha);
    } else {
        if (a.field() != field_) throw DomainError("phase coefficient from a different field");
        t_[alpha] = a;
    }
}

Scalar MultiPhase::eval(const std::vector<Scalar>& x) const {
    if (x.size() != d_) throw DomainError("evaluation point arity mismatch");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [alpha, a] : t_) {
        Scalar m = a;
        for (std::size_t v = 0; v < d_; ++v)
            if (alpha[v] != 0) m = m * x[v].pow(alpha[v]);
        acc = acc + m;
    }
    return acc;
}

MultiPhase MultiPhase::operator+(const MultiPhase& o) const {
    if (field_ != o.field_ || d_ != o.d_) throw DomainError("phase arithmetic shape mismatch");
    MultiPhase r = *this;
    for (const auto& [alpha, a] : o.t_) {
        auto it = r.t_.find(alpha);
        if (it == r.t_.end()) {
            r.t_.emplace(alpha, a);
        } else {
            Scalar s = it->second + a;
            if (s.is_zero())
                r.t_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

MultiPhase MultiPhase::operator-(const MultiPhase& o) const {
    return *this + o.scaled(-Scalar::one(field_));
}

MultiPhase MultiPhase::operator*(const MultiPhase& o) const {
    if (field_ != o.field_ || d_ != o.d_) throw DomainError("phase arithmetic shape mismatch");
    MultiPhase r(field_, d_);
    for (const auto& [alpha, a] : t_)
        for (const auto& [beta, b] : o.t_) {
            std::vector<std::int64_t> gamma(d_);
            for (std::size_t v = 0; v < d_; ++v) gamma[v] = alpha[v] + beta[v];
            Scalar s = a * b;
            if (s.is_zero()) continue;
            auto it = r.t_.find(gamma);
            if (it == r.t_.end()) {
                r.t_.emplace(std::move(gamma), s);
            } else {
                Scalar t = it->second + s;
                if (t.is_zero())
                    r.t_.erase(it);
                else
                    it->second = t;
            }
        }
    return r;
}

MultiPhase MultiPhase::scaled(const Scalar& c) const {
    MultiPhase r(field_, d_);
    if (c.is_zero()) return r;
    for (const auto& [alpha, a] : t_) r.t_.emplace(alpha, a * c);
    return r;
}

MultiPhase MultiPhase::derivative(std::size_t v) const {
    if (v >= d_) throw DomainError("derivative variable out of range");
    MultiPhase r(field_, d_);
    for (const auto& [alpha, a] : t_) {
        if (alpha[v] == 0) continue;
        Scalar s = a.times_integer(mpz_class(static_cast<long>(alpha[v])));
        if (s.is_zero()) continue;
        std::vector<std::int64_t> beta = alpha;
        beta[v] -= 1;
        r.t_.emplace(std::move(beta), s);
    }
    return r;
}

MultiPhase MultiPhase::derivative_multi(const std::vector<std::int64_t>& alpha) const {
    if (alpha.size() != d_) throw DomainError("derivative multi-index arity mismatch");
    MultiPhase r = *this;
    for (std::size_t v = 0; v < d_; ++v)
        for (std::int64_t k = 0; k < alpha[v]; ++k) r = r.derivative(v);
    return r;
}

MultiPhase MultiPhase::shifted(const std::vector<Scalar>& b) const {
    if (b.size() != d_) throw DomainError("shift point arity mismatch");
    MultiPhase r = *this;
    // substitute one variable at a time: x_v -> b_v + s_v
    for (std::size_t v = 0; v < d_; ++v) {
        if (b[v].is_zero()) continue;
        MultiPhase next(field_, d_);
        for (const auto& [alpha, a] : r.t_) {
            std::int64_t e = alpha[v];
            Scalar bp = Scalar::one(field_);  // b_v^{e-h}, built from h = e downward
            for (std::int64_t h = e; h >= 0; --h) {
                Scalar s = a.times_integer(binom(e, h)) * bp;
                if (h > 0) bp = bp * b[v];
                if (s.is_zero()) continue;
                std::vector<std::int64_t> beta = alpha;
                beta[v] = h;
                auto it = next.t_.find(beta);
                if (it == next.t_.end()) {
                    next.t_.emplace(std::move(beta), s);
                } else {
                    Scalar t = it->second + s;
                    if (t.is_zero())
                        next.t_.erase(it);
                    else
                        it->second = t;
                }
            }
        }
        r = next;
    }
    return r;
}

Valuation MultiPhase::gauss_norm_exponent() const {
    Valuation m = Valuation::infinity();
    for (const auto& [alpha, a] : t_) m = min(m, a.valuation());
    return m;
}

Valuation MultiPhase::gauss_norm_exponent_nonconstant() const {
    Valuation m = Valuation::infinity();
    for (const auto& [alpha, a] : t_) {
        bool constant = true;
        for (std::int64_t e : alpha)
            if (e != 0) constant = false;
        if (!constant) m = min(m, a.valuation());
    }
    return m;
}

std::string MultiPhase::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, a] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << a.str() << ")";
        for (std::size_t v = 0; v < d_; ++v) {
            if (alpha[v] == 0) continue;
            os << "*x" << (v + 1);
            if (alpha[v] > 1) os << "^" << alpha[v];
        }
    }
    return os.str();
}

VectorPhase::VectorPhase(const FieldSpec& F, std::size_t d_, std::vector<MultiPhase> comps)
    : field(F), d(d_), components(std::move(comps)) {
    if (components.empty()) throw DomainError("vector phase needs at least one component");
    for (const auto& g : components)
        if (g.field() != field || g.arity() != d)
            throw DomainError("vector phase component shape mismatch");
}

}  // namespace nonarch
