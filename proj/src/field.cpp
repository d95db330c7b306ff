#include "nonarch/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace nonarch {

namespace {

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t i = 3; i <= n / i; i += 2)
        if (n % i == 0) return false;
    return true;
}

// canonicalize an F_p((t)) payload from raw parts; den must be nonzero
FpRatFunc normalize_ratfunc(std::int64_t exp, FpPoly num, FpPoly den) {
    if (den.is_zero()) throw DivisionByZero("F_p((t)) denominator is zero");
    const std::uint32_t p = den.p();
    if (num.is_zero()) return FpRatFunc{0, FpPoly(p), FpPoly::constant(p, 1)};
    std::size_t en = num.ord_t(), ed = den.ord_t();
    exp += static_cast<std::int64_t>(en) - static_cast<std::int64_t>(ed);
    num = num.shifted_down(en);
    den = den.shifted_down(ed);
    FpPoly g = FpPoly::gcd(num, den);
    if (!g.is_one()) {
        num = num / g;
        den = den / g;
    }
    // make den monic, folding the unit into num
    std::uint32_t lead = den.leading();
    if (lead != 1) {
        FpPoly inv = FpPoly::constant(p, FpPoly::inv_mod_p(lead, p));
        num = num * inv;
        den = den * inv;
    }
    return FpRatFunc{exp, std::move(num), std::move(den)};
}

}  // namespace

FieldSpec::FieldSpec(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {
    if (!is_prime_i64(p)) throw DomainError("field: p = " + std::to_string(p) + " is not prime");
}

std::string FieldSpec::str() const {
    return (kind_ == FieldKind::Qp ? "Q_" : "F_") + std::to_string(p_) +
           (kind_ == FieldKind::Qp ? "" : "((t))");
}

FieldSpec make_field(FieldKind kind, std::int64_t p) { return FieldSpec(kind, p); }

FieldSpec make_field(const std::string& kind, std::int64_t p) {
    if (kind == "Qp") return FieldSpec(FieldKind::Qp, p);
    if (kind == "FpT") return FieldSpec(FieldKind::FpT, p);
    throw DomainError("field: unknown kind '" + kind + "' (expected Qp or FpT)");
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(const FieldSpec& F) {
    if (F.kind() == FieldKind::Qp) return Scalar(F, mpq_class(0));
    auto p = static_cast<std::uint32_t>(F.p());
    return Scalar(F, FpRatFunc{0, FpPoly(p), FpPoly::constant(p, 1)});
}

Scalar Scalar::one(const FieldSpec& F) { return from_integer(F, 1); }

Scalar Scalar::from_integer(const FieldSpec& F, std::int64_t n) {
    if (F.kind() == FieldKind::Qp) return Scalar(F, mpq_class(static_cast<long>(n)));
    auto p = static_cast<std::uint32_t>(F.p());
    return Scalar(F, normalize_ratfunc(0, FpPoly::constant(p, n), FpPoly::constant(p, 1)));
}

Scalar Scalar::from_mpq(const FieldSpec& F, const mpq_class& q) {
    if (F.kind() != FieldKind::Qp)
        throw PreconditionFailed("Scalar::from_mpq on a non-Q_p field");
    mpq_class c = q;
    c.canonicalize();
    return Scalar(F, c);
}

Scalar Scalar::from_ratfunc(const FieldSpec& F, FpRatFunc f) {
    if (F.kind() != FieldKind::FpT)
        throw PreconditionFailed("Scalar::from_ratfunc on a non-F_p((t)) field");
    return Scalar(F, normalize_ratfunc(f.exp, std::move(f.num), std::move(f.den)));
}

Scalar Scalar::uniformizer(const FieldSpec& F) { return uniformizer_pow(F, 1); }

Scalar Scalar::uniformizer_pow(const FieldSpec& F, std::int64_t e) {
    if (F.kind() == FieldKind::Qp) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), mpz_class(static_cast<long>(F.p())).get_mpz_t(),
                   static_cast<unsigned long>(e >= 0 ? e : -e));
        mpq_class q = e >= 0 ? mpq_class(pe) : mpq_class(mpz_class(1), pe);
        q.canonicalize();
        return Scalar(F, q);
    }
    auto p = static_cast<std::uint32_t>(F.p());
    return Scalar(F, FpRatFunc{e, FpPoly::constant(p, 1), FpPoly::constant(p, 1)});
}

bool Scalar::is_zero() const {
    if (field_.kind() == FieldKind::Qp) return std::get<mpq_class>(v_) == 0;
    return std::get<FpRatFunc>(v_).num.is_zero();
}

bool Scalar::is_one() const {
    if (field_.kind() == FieldKind::Qp) return std::get<mpq_class>(v_) == 1;
    const auto& f = std::get<FpRatFunc>(v_);
    return f.exp == 0 && f.num.is_one() && f.den.is_one();
}

std::int64_t mpz_ord_p(const mpz_class& n, std::int64_t p) {
    if (n == 0) throw PreconditionFailed("mpz_ord_p of zero");
    mpz_class rest;
    return static_cast<std::int64_t>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t()));
}

std::int64_t mpq_ord_p(const mpq_class& x, std::int64_t p) {
    if (x == 0) throw PreconditionFailed("mpq_ord_p of zero");
    return mpz_ord_p(mpz_class(x.get_num()), p) - mpz_ord_p(mpz_class(x.get_den()), p);
}

Valuation Scalar::valuation() const {
    if (is_zero()) return Valuation::infinity();
    if (field_.kind() == FieldKind::Qp)
        return Valuation(mpq_ord_p(std::get<mpq_class>(v_), field_.p()));
    return Valuation(std::get<FpRatFunc>(v_).exp);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw DomainError("scalar arithmetic across fields: " + field_.str() + " vs " +
                          o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.kind() == FieldKind::Qp)
        return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    const auto& a = std::get<FpRatFunc>(v_);
    const auto& b = std::get<FpRatFunc>(o.v_);
    if (a.num.is_zero()) return o;
    if (b.num.is_zero()) return *this;
    std::int64_t e = std::min(a.exp, b.exp);
    FpPoly na = a.num.shifted_up(static_cast<std::size_t>(a.exp - e)) * b.den;
    FpPoly nb = b.num.shifted_up(static_cast<std::size_t>(b.exp - e)) * a.den;
    return Scalar(field_, normalize_ratfunc(e, na + nb, a.den * b.den));
}

Scalar Scalar::operator-() const {
    if (field_.kind() == FieldKind::Qp)
        return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
    const auto& a = std::get<FpRatFunc>(v_);
    return Scalar(field_, FpRatFunc{a.exp, -a.num, a.den});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.kind() == FieldKind::Qp)
        return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    const auto& a = std::get<FpRatFunc>(v_);
    const auto& b = std::get<FpRatFunc>(o.v_);
    if (a.num.is_zero() || b.num.is_zero()) return zero(field_);
    return Scalar(field_, normalize_ratfunc(a.exp + b.exp, a.num * b.num, a.den * b.den));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.str());
    if (field_.kind() == FieldKind::Qp)
        return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
    const auto& a = std::get<FpRatFunc>(v_);
    return Scalar(field_, normalize_ratfunc(-a.exp, a.den, a.num));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(field_);
    Scalar base = *this;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k != 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Scalar Scalar::times_integer(const mpz_class& n) const {
    if (field_.kind() == FieldKind::Qp)
        return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * mpq_class(n)));
    mpz_class r = n % field_.p();
    if (r < 0) r += field_.p();
    const auto& a = std::get<FpRatFunc>(v_);
    if (r == 0 || a.num.is_zero()) return zero(field_);
    FpPoly c = FpPoly::constant(static_cast<std::uint32_t>(field_.p()), r.get_si());
    return Scalar(field_, normalize_ratfunc(a.exp, a.num * c, a.den));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.kind() == FieldKind::Qp)
        return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    const auto& a = std::get<FpRatFunc>(v_);
    const auto& b = std::get<FpRatFunc>(o.v_);
    if (a.num.is_zero()) return b.num.is_zero();
    return a.exp == b.exp && a.num == b.num && a.den == b.den;
}

const mpq_class& Scalar::rat() const {
    if (field_.kind() != FieldKind::Qp)
        throw PreconditionFailed("Scalar::rat on a non-Q_p scalar");
    return std::get<mpq_class>(v_);
}

const FpRatFunc& Scalar::ratfunc() const {
    if (field_.kind() != FieldKind::FpT)
        throw PreconditionFailed("Scalar::ratfunc on a non-F_p((t)) scalar");
    return std::get<FpRatFunc>(v_);
}

// ---------------------------------------------------------------------------
// text format

namespace {

// polynomial in t over F_p, e.g. "1+2t+t^3", "-t^2", "4"
FpPoly parse_fp_poly(const std::string& raw, std::uint32_t p) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw DomainError("empty F_p[t] polynomial literal");
    std::vector<std::uint32_t> coeffs;
    auto add_term = [&](std::int64_t coef, std::size_t exp) {
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
        std::int64_t r = ((coef % p) + p) % p;
        coeffs[exp] = static_cast<std::uint32_t>((coeffs[exp] + r) % p);
    };
    std::size_t i = 0;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        if (i >= s.size()) throw DomainError("dangling sign in '" + raw + "'");
        std::int64_t coef = 1;
        bool saw_digits = false;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) {
            coef = std::stoll(s.substr(start, i - start));
            saw_digits = true;
        }
        std::size_t exp = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t estart = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == estart) throw DomainError("missing exponent in '" + raw + "'");
                exp = static_cast<std::size_t>(std::stoull(s.substr(estart, i - estart)));
            }
        } else if (!saw_digits) {
            throw DomainError("cannot parse term at '" + s.substr(start) + "' in '" + raw + "'");
        }
        add_term(sign * coef, exp);
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw DomainError("unexpected character '" + std::string(1, s[i]) + "' in '" + raw + "'");
    }
    return FpPoly(p, std::move(coeffs));
}

// split "num/den" at the single top-level slash (nesting via parentheses)
bool split_fraction(const std::string& s, std::string& num, std::string& den) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '/' && depth == 0) {
            num = s.substr(0, i);
            den = s.substr(i + 1);
            return true;
        }
    }
    return false;
}

bool poly_is_single_term(const FpPoly& f) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f.coeff(i) != 0) ++n;
    return n <= 1;
}

}  // namespace

Scalar Scalar::parse(const FieldSpec& F, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty scalar literal");
    if (F.kind() == FieldKind::Qp) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                      (c == '-' && (i == 0 || s[i - 1] == '/'));
            if (!ok) throw DomainError("bad rational literal '" + text + "' for " + F.str());
        }
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal '" + text + "'");
        if (q.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
        q.canonicalize();
        return Scalar(F, q);
    }
    auto p = static_cast<std::uint32_t>(F.p());
    std::string nums, dens;
    if (split_fraction(s, nums, dens)) {
        FpPoly num = parse_fp_poly(nums, p);
        FpPoly den = parse_fp_poly(dens, p);
        return Scalar(F, normalize_ratfunc(0, std::move(num), std::move(den)));
    }
    return Scalar(F, normalize_ratfunc(0, parse_fp_poly(s, p), FpPoly::constant(p, 1)));
}

std::string Scalar::str() const {
    if (field_.kind() == FieldKind::Qp) return std::get<mpq_class>(v_).get_str();
    const auto& a = std::get<FpRatFunc>(v_);
    if (a.num.is_zero()) return "0";
    FpPoly num = a.exp >= 0 ? a.num.shifted_up(static_cast<std::size_t>(a.exp)) : a.num;
    FpPoly den = a.exp < 0 ? a.den.shifted_up(static_cast<std::size_t>(-a.exp)) : a.den;
    if (den.is_one()) return num.str();
    std::string ns = poly_is_single_term(num) ? num.str() : "(" + num.str() + ")";
    std::string ds = poly_is_single_term(den) ? den.str() : "(" + den.str() + ")";
    return ns + "/" + ds;
}

// ---------------------------------------------------------------------------
// characters

UnitRootExponent::UnitRootExponent(mpq_class r) : r_(std::move(r)) {
    r_.canonicalize();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r_.get_num_mpz_t(), r_.get_den_mpz_t());
    r_ -= mpq_class(fl);
}

UnitRootExponent UnitRootExponent::operator+(const UnitRootExponent& o) const {
    return UnitRootExponent(r_ + o.r_);
}

UnitRootExponent UnitRootExponent::operator-() const { return UnitRootExponent(-r_); }

std::string UnitRootExponent::str() const { return r_.get_str(); }

mpq_class fractional_part_padic(const mpq_class& x, std::int64_t p) {
    if (x == 0) return mpq_class(0);
    std::int64_t v = mpq_ord_p(x, p);
    if (v >= 0) return mpq_class(0);
    // x = num / (p^k * d'), p coprime to num and d'; the fractional part is
    // (num * d'^{-1} mod p^k) / p^k
    std::uint64_t k = static_cast<std::uint64_t>(-v);
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t(), k);
    mpz_class dprime = x.get_den() / pk;
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), dprime.get_mpz_t(), pk.get_mpz_t()) == 0)
        throw PreconditionFailed("fractional_part_padic: non-invertible denominator");
    mpz_class m = (x.get_num() * dinv) % pk;
    if (m < 0) m += pk;
    mpq_class r(m, pk);
    r.canonicalize();
    return r;
}

UnitRootExponent character(const Scalar& s) {
    const FieldSpec& F = s.field();
    if (s.is_zero()) return UnitRootExponent();
    if (F.kind() == FieldKind::Qp) {
        mpq_class z = s.rat() / F.p();
        return UnitRootExponent(fractional_part_padic(z, F.p()));
    }
    // F_p((t)): the exponent is (constant Laurent coefficient of s) / p
    const FpRatFunc& a = s.ratfunc();
    if (a.exp > 0) return UnitRootExponent();
    std::size_t k = static_cast<std::size_t>(-a.exp);
    FpPoly series = (a.num * a.den.inverse_mod_tk(k + 1)).truncated(k + 1);
    std::uint32_t c0 = series.coeff(k);
    if (c0 == 0) return UnitRootExponent();
    mpq_class r(static_cast<long>(c0), static_cast<long>(F.p()));
    r.canonicalize();
    return UnitRootExponent(r);
}

std::vector<Scalar> coset_representatives(const FieldSpec& F, std::int64_t m, std::int64_t cap) {
    if (m < 0) throw DomainError("coset_representatives: negative level");
    double count = std::pow(static_cast<double>(F.p()), static_cast<double>(m));
    if (count > static_cast<double>(cap))
        throw ResourceLimit("coset_representatives: q^m over enumeration cap", count,
                            static_cast<double>(cap));
    std::int64_t n = 1;
    for (std::int64_t i = 0; i < m; ++i) n *= F.p();
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(n));
    if (F.kind() == FieldKind::Qp) {
        for (std::int64_t i = 0; i < n; ++i) out.push_back(Scalar::from_integer(F, i));
        return out;
    }
    auto p = static_cast<std::uint32_t>(F.p());
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> digits;
        std::int64_t x = i;
        while (x > 0) {
            digits.push_back(static_cast<std::uint32_t>(x % F.p()));
            x /= F.p();
        }
        out.push_back(Scalar::from_ratfunc(
            F, FpRatFunc{0, FpPoly(p, std::move(digits)), FpPoly::constant(p, 1)}));
    }
    return out;
}

}  // namespace nonarch
