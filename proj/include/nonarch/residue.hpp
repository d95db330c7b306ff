#pragma once

#include <cstdint>
#include <vector>

#include "nonarch/field.hpp"

namespace nonarch {

/// (a*b) mod m for m < 2^63, exact via 128-bit intermediate
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// (a^e) mod m for m < 2^63
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// p^e as uint64; ResourceLimit if it does not fit below 2^62
std::uint64_t pow_checked_u64(std::int64_t p, std::int64_t e);

/**
 * The residue of an integral Q_p scalar modulo p^k, as the unique integer in
 * [0, p^k): num * den^{-1} mod p^k (the denominator of a canonical rational
 * with ord >= 0 is prime to p).  PreconditionFailed if ord(x) < 0; requires
 * p^k < 2^62.
 */
std::uint64_t qp_residue(const Scalar& x, std::int64_t k);

/**
 * The t-adic digits (coefficients of t^0..t^{k-1}) of an integral F_p((t))
 * scalar, each in [0, p).  PreconditionFailed if ord(x) < 0.
 */
std::vector<std::uint8_t> fpt_digits(const Scalar& x, std::int64_t k);

}  // namespace nonarch
