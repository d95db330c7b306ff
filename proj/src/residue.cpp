#include "nonarch/residue.hpp"

#include <cmath>

#include "nonarch/errors.hpp"
#include "nonarch/fp_poly.hpp"

namespace nonarch {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return acc;
}

std::uint64_t pow_checked_u64(std::int64_t p, std::int64_t e) {
    if (p < 2 || e < 0) throw PreconditionFailed("pow_checked_u64: bad arguments");
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
    std::uint64_t acc = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (acc > kLimit / static_cast<std::uint64_t>(p))
            throw ResourceLimit("p^e exceeds the 64-bit working range",
                                std::pow(static_cast<double>(p),
                                         static_cast<double>(e)),
                                std::ldexp(1.0, 62));
        acc *= static_cast<std::uint64_t>(p);
    }
    return acc;
}

std::uint64_t qp_residue(const Scalar& x, std::int64_t k) {
    const FieldSpec& F = x.field();
    if (F.kind() != FieldKind::Qp)
        throw PreconditionFailed("qp_residue: scalar is not a Q_p element");
    if (x.is_zero()) return 0;
    if (x.valuation() < 0)
        throw PreconditionFailed("qp_residue: scalar has negative valuation");
    mpz_class modulus = 1;
    for (std::int64_t i = 0; i < k; ++i) modulus *= F.p();
    const mpq_class& r = x.rat();
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), r.get_den().get_mpz_t(),
                   modulus.get_mpz_t()) == 0)
        throw PreconditionFailed("qp_residue: denominator not invertible mod p^k");
    mpz_class res = r.get_num() * den_inv;
    mpz_fdiv_r(res.get_mpz_t(), res.get_mpz_t(), modulus.get_mpz_t());
    if (mpz_sizeinbase(res.get_mpz_t(), 2) > 62)
        throw PreconditionFailed("qp_residue: p^k exceeds the 64-bit range");
    return mpz_get_ui(res.get_mpz_t());
}

std::vector<std::uint8_t> fpt_digits(const Scalar& x, std::int64_t k) {
    const FieldSpec& F = x.field();
    if (F.kind() != FieldKind::FpT)
        throw PreconditionFailed("fpt_digits: scalar is not an F_p((t)) element");
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(k), 0);
    if (x.is_zero()) return digits;
    if (x.valuation() < 0)
        throw PreconditionFailed("fpt_digits: scalar has negative valuation");
    const FpRatFunc& rf = x.ratfunc();
    if (rf.exp >= k) return digits;
    const std::size_t budget = static_cast<std::size_t>(k - rf.exp);
    FpPoly body = (rf.num * rf.den.inverse_mod_tk(budget)).truncated(budget);
    for (std::int64_t i = 0; i < k - rf.exp; ++i) {
        std::int64_t c = body.coeff(i);
        digits[static_cast<std::size_t>(i + rf.exp)] =
            static_cast<std::uint8_t>(c);
    }
    return digits;
}

}  // namespace nonarch
