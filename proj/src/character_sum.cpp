#include "nonarch/character_sum.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// exponent s of the p-power denominator of a normalized exponent in [0,1)
std::int64_t den_exponent(const mpq_class& r, std::int64_t p) {
    mpz_class den = r.get_den();
    std::int64_t s = 0;
    while (den != 1) {
        mpz_class q, rem;
        mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t(),
                       static_cast<unsigned long>(p));
        if (rem != 0)
            throw PreconditionFailed(
                "character sum: exponent denominator is not a power of p");
        den = q;
        ++s;
    }
    return s;
}

}  // namespace

CharacterSum::CharacterSum(const FieldSpec& F, std::int64_t scale)
    : field_(F), scale_(scale) {}

void CharacterSum::add_term(const UnitRootExponent& r, const mpz_class& count) {
    if (count == 0) return;
    auto it = terms_.find(r);
    if (it == terms_.end()) {
        terms_.emplace(r, count);
        return;
    }
    it->second += count;
    if (it->second == 0) terms_.erase(it);
}

std::int64_t CharacterSum::denominator_exponent() const {
    std::int64_t s = 0;
    for (const auto& [r, count] : terms_)
        s = std::max(s, den_exponent(r.value(), field_.p()));
    return s;
}

bool CharacterSum::is_zero() const {
    if (terms_.empty()) return true;
    const std::int64_t p = field_.p();
    const std::int64_t s = denominator_exponent();
    if (s == 0) {
        // all exponents are 0 mod 1: the value is the plain integer total
        mpz_class total = 0;
        for (const auto& [r, count] : terms_) total += count;
        return total == 0;
    }
    // N = p^s, M = p^{s-1}; bucket numerators k of k/N by k mod M and demand
    // that every class carries all p siblings with one common count
    mpz_class N = 1, M = 1;
    for (std::int64_t i = 0; i < s; ++i) {
        if (i + 1 < s) M *= p;
        N *= p;
    }
    std::map<mpz_class, std::vector<mpz_class>> classes;
    for (const auto& [r, count] : terms_) {
        const mpq_class& v = r.value();
        mpz_class k = v.get_num() * (N / v.get_den());
        mpz_class c = k % M;
        classes[c].push_back(count);
    }
    for (const auto& [c, counts] : classes) {
        if (static_cast<std::int64_t>(counts.size()) != p) return false;
        for (const auto& n : counts)
            if (n != counts.front()) return false;
    }
    return true;
}

std::complex<double> CharacterSum::value() const {
    const double q = static_cast<double>(field_.residue_cardinality());
    // divide by q^scale rather than multiplying by its inverse: when the sum
    // collapses to count*q^scale (e.g. a trivial integrand) the quotient is
    // then exact in binary floating point
    const double den = std::pow(q, static_cast<double>(scale_));
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [r, count] : terms_) {
        const double theta = kTwoPi * r.value().get_d();
        acc += count.get_d() * std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return acc / den;
}

double CharacterSum::magnitude() const {
    if (is_zero()) return 0.0;
    return std::abs(value());
}

double CharacterSum::magnitude_error() const {
    const double q = static_cast<double>(field_.residue_cardinality());
    const double den = std::pow(q, static_cast<double>(scale_));
    double mass = 0.0;
    for (const auto& [r, count] : terms_) mass += std::abs(count.get_d());
    return std::ldexp(mass / den, -40);
}

CharacterSum CharacterSum::operator+(const CharacterSum& o) const {
    if (field_.kind() != o.field_.kind() || field_.p() != o.field_.p())
        throw DomainError("character sum: field mismatch");
    const std::int64_t m = std::max(scale_, o.scale_);
    const std::int64_t q = field_.residue_cardinality();
    CharacterSum out(field_, m);
    mpz_class lift_a = 1, lift_b = 1;
    for (std::int64_t i = scale_; i < m; ++i) lift_a *= q;
    for (std::int64_t i = o.scale_; i < m; ++i) lift_b *= q;
    for (const auto& [r, count] : terms_) out.add_term(r, count * lift_a);
    for (const auto& [r, count] : o.terms_) out.add_term(r, count * lift_b);
    return out;
}

CharacterSum CharacterSum::operator-(const CharacterSum& o) const {
    CharacterSum neg(o.field_, o.scale_);
    for (const auto& [r, count] : o.terms_) neg.add_term(r, -count);
    return *this + neg;
}

bool CharacterSum::equals(const CharacterSum& o) const {
    return (*this - o).is_zero();
}

std::string CharacterSum::str() const {
    std::ostringstream os;
    os << field_.residue_cardinality() << "^-" << scale_ << " * (";
    bool first = true;
    for (const auto& [r, count] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << count.get_str() << "*e(" << r.str() << ")";
    }
    if (first) os << "0";
    os << ")";
    return os.str();
}

}  // namespace nonarch
