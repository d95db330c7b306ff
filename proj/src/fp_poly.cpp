#include "nonarch/fp_poly.hpp"

#include <algorithm>

namespace nonarch {

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    FpPoly out(p);
    if (r != 0) out.c_ = {static_cast<std::uint32_t>(r)};
    return out;
}

FpPoly FpPoly::t_power(std::uint32_t p, std::size_t k) {
    FpPoly out(p);
    out.c_.assign(k + 1, 0);
    out.c_[k] = 1;
    return out;
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t FpPoly::ord_t() const {
    if (is_zero()) throw PreconditionFailed("FpPoly::ord_t of zero polynomial");
    std::size_t i = 0;
    while (c_[i] == 0) ++i;
    return i;
}

std::uint32_t FpPoly::leading() const {
    if (is_zero()) throw PreconditionFailed("FpPoly::leading of zero polynomial");
    return c_.back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    FpPoly out(p_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i)
        out.c_[i] = (coeff(i) + o.coeff(i)) % p_;
    out.trim();
    return out;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    FpPoly out(p_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i)
        out.c_[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
    out.trim();
    return out;
}

FpPoly FpPoly::operator-() const {
    FpPoly out(p_);
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = (p_ - c_[i]) % p_;
    out.trim();
    return out;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    FpPoly out(p_);
    if (is_zero() || o.is_zero()) return out;
    out.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out.c_[i + j] = (out.c_[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p_;
    }
    out.trim();
    return out;
}

std::uint32_t FpPoly::inv_mod_p(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw DivisionByZero("inverse of 0 mod p");
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void FpPoly::divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const {
    if (d.is_zero()) throw DivisionByZero("FpPoly division by zero");
    q = FpPoly(p_);
    r = *this;
    if (degree() < d.degree()) return;
    std::uint32_t dl_inv = inv_mod_p(d.leading(), p_);
    q.c_.assign(c_.size() - d.c_.size() + 1, 0);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        std::uint32_t factor = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(r.leading()) * dl_inv % p_);
        q.c_[shift] = factor;
        // r -= factor * t^shift * d
        for (std::size_t i = 0; i < d.c_.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(factor) * d.c_[i] % p_;
            r.c_[shift + i] = static_cast<std::uint32_t>((r.c_[shift + i] + p_ - sub) % p_);
        }
        r.trim();
    }
    q.trim();
}

FpPoly FpPoly::operator/(const FpPoly& d) const {
    FpPoly q(p_), r(p_);
    divmod(d, q, r);
    return q;
}

FpPoly FpPoly::operator%(const FpPoly& d) const {
    FpPoly q(p_), r(p_);
    divmod(d, q, r);
    return r;
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = b;
        b = r;
    }
    return a.make_monic();
}

FpPoly FpPoly::make_monic() const {
    if (is_zero()) return *this;
    std::uint32_t inv = inv_mod_p(leading(), p_);
    FpPoly out(p_);
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.c_[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[i]) * inv % p_);
    return out;
}

FpPoly FpPoly::shifted_down(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    if (k >= c_.size()) throw PreconditionFailed("FpPoly::shifted_down below t^0");
    FpPoly out(p_);
    out.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
    out.trim();
    return out;
}

FpPoly FpPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    FpPoly out(p_);
    out.c_.assign(k, 0);
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

FpPoly FpPoly::truncated(std::size_t L) const {
    FpPoly out(p_);
    out.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(c_.size(), L)));
    out.trim();
    return out;
}

FpPoly FpPoly::inverse_mod_tk(std::size_t L) const {
    if (is_zero() || c_[0] == 0)
        throw DivisionByZero("FpPoly::inverse_mod_tk needs a unit constant term");
    // standard power-series recurrence: inv[n] determined by lower terms
    std::uint32_t c0inv = inv_mod_p(c_[0], p_);
    std::vector<std::uint32_t> inv(L, 0);
    inv[0] = c0inv;
    for (std::size_t n = 1; n < L; ++n) {
        std::uint64_t acc = 0;
        for (std::size_t i = 1; i <= n; ++i)
            acc = (acc + static_cast<std::uint64_t>(coeff(i)) * inv[n - i]) % p_;
        inv[n] = static_cast<std::uint32_t>((p_ - acc % p_) % p_ * c0inv % p_);
    }
    FpPoly out(p_);
    out.c_ = std::move(inv);
    out.trim();
    return out;
}

FpPoly FpPoly::derivative() const {
    FpPoly out(p_);
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        out.c_[i - 1] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[i]) * (i % p_) % p_);
    out.trim();
    return out;
}

std::string FpPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += std::to_string(c_[i]);
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace nonarch
