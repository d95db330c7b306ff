#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace nonarch {

/**
 * In-place forward cyclic DFT of length N = p^s with the positive-frequency
 * kernel: A[u] <- sum_w a[w] e^{+2 pi i u w / N}.  Radix-p Cooley-Tukey with
 * base-p digit reversal; p is any small prime (2, 3, 5, ...).
 */
void fft_radix_p(std::vector<std::complex<double>>& a, std::int64_t p);

/**
 * In-place forward group DFT over (Z/p)^s, indices packed base p with axis l
 * at place value p^l: A[u] <- sum_w a[w] zeta_p^{<u,w>} where <u,w> is the
 * digitwise dot product mod p.  Axis-wise p-point transforms, no twiddles.
 */
void group_dft_p(std::vector<std::complex<double>>& a, std::int64_t p,
                 std::int64_t s);

}  // namespace nonarch
