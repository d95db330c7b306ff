#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonarch/errors.hpp"

namespace nonarch {

/**
 * Dense polynomial over the prime field F_p, p small.  Coefficients are kept
 * reduced in [0, p) and the vector is trimmed (no trailing zeros), so the
 * zero polynomial is the empty vector.  This is the coefficient arithmetic
 * underneath F_p((t)) scalars and the truncated rings F_p[t]/t^L; everything
 * here is exact.
 */
class FpPoly {
public:
    FpPoly() : p_(2) {}
    explicit FpPoly(std::uint32_t p) : p_(p) {}
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

    static FpPoly constant(std::uint32_t p, std::int64_t c);
    static FpPoly t_power(std::uint32_t p, std::size_t k);  // t^k

    std::uint32_t p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    // degree of the zero polynomial is -1 by convention here
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    // order of vanishing at t = 0; PreconditionFailed on the zero polynomial
    std::size_t ord_t() const;
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const;
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly operator-() const;
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }

    // Euclidean division by a nonzero divisor: *this = q*d + r, deg r < deg d.
    void divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const;
    FpPoly operator/(const FpPoly& d) const;  // exact or truncating division
    FpPoly operator%(const FpPoly& d) const;

    // monic gcd (gcd(0,0) = 0)
    static FpPoly gcd(FpPoly a, FpPoly b);

    FpPoly make_monic() const;
    // divide by t^ord_t(); identity on the zero polynomial
    FpPoly shifted_down(std::size_t k) const;
    FpPoly shifted_up(std::size_t k) const;  // multiply by t^k

    // truncate to degree < L (i.e. reduce mod t^L)
    FpPoly truncated(std::size_t L) const;
    // inverse mod t^L; requires unit constant term
    FpPoly inverse_mod_tk(std::size_t L) const;

    FpPoly derivative() const;

    std::string str() const;  // "1+2t+t^3", "0" for zero

    static std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p);

private:
    void trim();
    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
};

}  // namespace nonarch
