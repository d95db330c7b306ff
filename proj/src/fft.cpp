#include "nonarch/fft.hpp"

#include <cmath>
#include <cstddef>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// stage count s with p^s == n; PreconditionFailed if n is not a power of p
std::int64_t stages_for(std::size_t n, std::int64_t p) {
    std::int64_t s = 0;
    std::size_t m = 1;
    while (m < n) {
        m *= static_cast<std::size_t>(p);
        ++s;
    }
    if (m != n) throw PreconditionFailed("fft: length is not a power of p");
    return s;
}

// base-p digit reversal permutation, applied in place
void digit_reverse(std::vector<std::complex<double>>& a, std::int64_t p,
                   std::int64_t s) {
    const std::size_t n = a.size();
    std::vector<std::size_t> rev(n);
    const std::size_t up = static_cast<std::size_t>(p);
    for (std::size_t i = 1; i < n; ++i) {
        rev[i] = rev[i / up] / up + (i % up) * (n / up);
    }
    (void)s;
    for (std::size_t i = 0; i < n; ++i)
        if (rev[i] > i) std::swap(a[i], a[rev[i]]);
}

}  // namespace

void fft_radix_p(std::vector<std::complex<double>>& a, std::int64_t p) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    const std::int64_t s = stages_for(n, p);
    const std::size_t up = static_cast<std::size_t>(p);
    digit_reverse(a, p, s);

    // zeta_p^{r k} table for the p-point butterflies
    std::vector<std::complex<double>> zp(up * up);
    for (std::size_t r = 0; r < up; ++r)
        for (std::size_t k = 0; k < up; ++k) {
            const double th = kTwoPi * static_cast<double>((r * k) % up) /
                              static_cast<double>(up);
            zp[r * up + k] = {std::cos(th), std::sin(th)};
        }

    std::vector<std::complex<double>> x(up);
    std::vector<std::complex<double>> tw;
    for (std::size_t len = up; len <= n; len *= up) {
        const std::size_t m = len / up;
        // forward twiddles e^{+2 pi i t / len}, t < len (r*t < len always)
        tw.assign(len, {1.0, 0.0});
        for (std::size_t t = 1; t < len; ++t) {
            const double th = kTwoPi * static_cast<double>(t) /
                              static_cast<double>(len);
            tw[t] = {std::cos(th), std::sin(th)};
        }
        for (std::size_t b0 = 0; b0 < n; b0 += len) {
            for (std::size_t t = 0; t < m; ++t) {
                for (std::size_t r = 0; r < up; ++r)
                    x[r] = a[b0 + t + r * m] * tw[r * t];
                for (std::size_t k = 0; k < up; ++k) {
                    std::complex<double> acc(0.0, 0.0);
                    const std::complex<double>* row = &zp[0];
                    for (std::size_t r = 0; r < up; ++r, row += up)
                        acc += x[r] * row[k];
                    a[b0 + t + k * m] = acc;
                }
            }
        }
    }
}

void group_dft_p(std::vector<std::complex<double>>& a, std::int64_t p,
                 std::int64_t s) {
    const std::size_t n = a.size();
    const std::size_t up = static_cast<std::size_t>(p);
    {
        std::size_t m = 1;
        for (std::int64_t i = 0; i < s; ++i) m *= up;
        if (m != n)
            throw PreconditionFailed("group_dft_p: length is not p^s");
    }
    std::vector<std::complex<double>> zp(up * up);
    for (std::size_t r = 0; r < up; ++r)
        for (std::size_t k = 0; k < up; ++k) {
            const double th = kTwoPi * static_cast<double>((r * k) % up) /
                              static_cast<double>(up);
            zp[r * up + k] = {std::cos(th), std::sin(th)};
        }
    std::vector<std::complex<double>> x(up);
    std::size_t stride = 1;
    for (std::int64_t axis = 0; axis < s; ++axis, stride *= up) {
        const std::size_t block = stride * up;
        for (std::size_t start = 0; start < n; start += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t base = start + off;
                for (std::size_t d = 0; d < up; ++d)
                    x[d] = a[base + d * stride];
                for (std::size_t k = 0; k < up; ++k) {
                    std::complex<double> acc(0.0, 0.0);
                    for (std::size_t d = 0; d < up; ++d)
                        acc += x[d] * zp[d * up + k];
                    a[base + k * stride] = acc;
                }
            }
        }
    }
}

}  // namespace nonarch
