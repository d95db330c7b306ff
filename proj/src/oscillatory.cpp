#include "nonarch/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <utility>

#include "nonarch/errors.hpp"
#include "nonarch/fft.hpp"
#include "nonarch/fp_poly.hpp"
#include "nonarch/parallel.hpp"
#include "nonarch/residue.hpp"

namespace nonarch {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
// shells whose exponent group is at most this size are evaluated exactly in
// the cyclotomic ring (quadratic in the size, and able to certify zeros);
// larger shells go through the float transform with a reported error bound
constexpr std::int64_t kExactShellLimit = 4096;

std::int64_t checked_pow_i64(std::int64_t p, std::int64_t e, std::int64_t cap,
                             const char* what) {
    __int128 acc = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        acc *= p;
        if (acc > static_cast<__int128>(cap))
            throw ResourceLimit(what,
                                std::pow(static_cast<double>(p),
                                         static_cast<double>(e)),
                                static_cast<double>(cap));
    }
    return static_cast<std::int64_t>(acc);
}

std::string fmt9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::string(buf);
}

// count of shell representatives: length-one tuples of (O/pi^S)^n
std::int64_t shell_rep_count(std::int64_t p, std::int64_t S, std::int64_t n) {
    if (S < 1) return 1;
    constexpr __int128 kMax = static_cast<__int128>(0x7fffffffffffffffLL);
    __int128 hi = 1, lo = 1;
    for (std::int64_t i = 0; i < S * n; ++i) {
        hi *= p;
        if (hi > kMax)
            throw ResourceLimit("shell representative count overflows",
                                std::pow(static_cast<double>(p),
                                         static_cast<double>(S) *
                                             static_cast<double>(n)),
                                9.2e18);
    }
    for (std::int64_t i = 0; i < (S - 1) * n; ++i) lo *= p;
    return static_cast<std::int64_t>(hi - lo);
}

struct ShellOut {
    double sup = 0.0;
    double err = 0.0;
    bool exact_zero = false;
    std::int64_t level = 0;  // S: u and x both enumerated mod pi^S
};

std::complex<double> unit_root(std::int64_t k, std::int64_t n) {
    const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(th), std::sin(th)};
}

// ---------------------------------------------------------------------------
// univariate shell supremum over Q_p
// ---------------------------------------------------------------------------

ShellOut shell_uni_qp(const Phase& f, std::int64_t j, std::int64_t cap) {
    const FieldSpec& F = f.field();
    const std::int64_t p = F.p();
    ShellOut out;
    const Valuation nc = f.gauss_norm_exponent_nonconstant();
    if (!nc.is_finite()) {
        // constant integrand: |I(y)| = |psi(y a_0)| = 1 on every shell
        out.sup = 1.0;
        out.level = std::max<std::int64_t>(j + 1, 0);
        return out;
    }
    const std::int64_t gpos = std::max<std::int64_t>(0, -nc.value());
    const std::int64_t S = j + 1 + gpos;
    out.level = S;
    if (S < 1) {
        // y (f(x) - a_0) lands in pi O_K for the whole shell: trivial character
        out.sup = 1.0;
        return out;
    }
    const std::int64_t N =
        checked_pow_i64(p, S, cap, "shell enumeration exceeds coset cap");
    const std::uint64_t uN = static_cast<std::uint64_t>(N);

    // residues of pi^{gpos} a_i (integral by the choice of gpos), i >= 1,
    // listed by descending exponent for the sparse Horner walk
    const Scalar shift = Scalar::uniformizer_pow(F, gpos);
    std::vector<std::pair<std::int64_t, std::uint64_t>> mono;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        if (it->first < 1) continue;
        mono.emplace_back(it->first, qp_residue(it->second * shift, S));
    }

    // integer histogram of w(b) = pi^{gpos}(f(b) - a_0) mod pi^S
    std::vector<std::int64_t> H(static_cast<std::size_t>(N), 0);
    for (std::int64_t b = 0; b < N; ++b) {
        const std::uint64_t ub = static_cast<std::uint64_t>(b);
        std::uint64_t acc = 0;
        std::int64_t pending = 0;
        for (std::size_t t = 0; t < mono.size(); ++t) {
            if (t == 0) {
                acc = mono[t].second;
            } else {
                acc = mulmod_u64(
                    acc,
                    powmod_u64(ub,
                               static_cast<std::uint64_t>(pending -
                                                          mono[t].first),
                               uN),
                    uN);
                acc = (acc + mono[t].second) % uN;
            }
            pending = mono[t].first;
        }
        acc = mulmod_u64(acc, powmod_u64(ub, static_cast<std::uint64_t>(pending), uN),
                         uN);
        ++H[static_cast<std::size_t>(acc)];
    }

    if (N <= kExactShellLimit) {
        // exact cyclotomic path: per unit u the exponent multiset is an
        // integer vector over Z/N; zero is certified by the sibling relation
        // (all p counts equal within each class mod N/p)
        std::vector<std::complex<double>> root(static_cast<std::size_t>(N));
        for (std::int64_t k2 = 0; k2 < N; ++k2)
            root[static_cast<std::size_t>(k2)] = unit_root(k2, N);
        const std::int64_t M = N / p;
        std::vector<std::int64_t> cnt(static_cast<std::size_t>(N));
        bool all_zero = true;
        double sup = 0.0;
        for (std::int64_t u = 1; u < N; ++u) {
            if (u % p == 0) continue;
            std::fill(cnt.begin(), cnt.end(), 0);
            for (std::int64_t w = 0; w < N; ++w)
                if (H[static_cast<std::size_t>(w)])
                    cnt[static_cast<std::size_t>(mulmod_u64(
                        static_cast<std::uint64_t>(u),
                        static_cast<std::uint64_t>(w), uN))] +=
                        H[static_cast<std::size_t>(w)];
            bool zero = true;
            for (std::int64_t c = 0; c < M && zero; ++c)
                for (std::int64_t i = 1; i < p; ++i)
                    if (cnt[static_cast<std::size_t>(c + i * M)] !=
                        cnt[static_cast<std::size_t>(c)]) {
                        zero = false;
                        break;
                    }
            if (zero) continue;
            all_zero = false;
            std::complex<double> acc(0.0, 0.0);
            for (std::int64_t k2 = 0; k2 < N; ++k2)
                if (cnt[static_cast<std::size_t>(k2)])
                    acc += static_cast<double>(cnt[static_cast<std::size_t>(k2)]) *
                           root[static_cast<std::size_t>(k2)];
            sup = std::max(sup, std::abs(acc));
        }
        if (all_zero) {
            out.sup = 0.0;
            out.err = 0.0;
            out.exact_zero = true;
            return out;
        }
        out.sup = sup / static_cast<double>(N);
        out.err = std::ldexp(1.0, -40);
        return out;
    }

    // transform path: one radix-p FFT of the integer histogram, then max
    // over the unit frequencies
    std::vector<std::complex<double>> A(static_cast<std::size_t>(N));
    for (std::int64_t w = 0; w < N; ++w)
        A[static_cast<std::size_t>(w)] = {
            static_cast<double>(H[static_cast<std::size_t>(w)]), 0.0};
    fft_radix_p(A, p);
    double sup = 0.0;
    for (std::int64_t u = 0; u < N; ++u)
        if (u % p != 0)
            sup = std::max(sup, std::abs(A[static_cast<std::size_t>(u)]));
    out.sup = sup / static_cast<double>(N);
    out.err = std::ldexp(1.0, -40) +
              static_cast<double>(S) * static_cast<double>(p) *
                  std::ldexp(1.0, -50);
    return out;
}

// ---------------------------------------------------------------------------
// univariate shell supremum over F_p((t))
// ---------------------------------------------------------------------------

ShellOut shell_uni_fpt(const Phase& f, std::int64_t j, std::int64_t cap) {
    const FieldSpec& F = f.field();
    const std::int64_t p = F.p();
    ShellOut out;
    const Valuation nc = f.gauss_norm_exponent_nonconstant();
    if (!nc.is_finite()) {
        out.sup = 1.0;
        out.level = std::max<std::int64_t>(j + 1, 0);
        return out;
    }
    const std::int64_t gpos = std::max<std::int64_t>(0, -nc.value());
    const std::int64_t S = j + 1 + gpos;
    out.level = S;
    if (S < 1) {
        out.sup = 1.0;
        return out;
    }
    const std::int64_t N =
        checked_pow_i64(p, S, cap, "shell enumeration exceeds coset cap");

    // dense coefficient polynomials of t^{gpos} a_e mod t^S, e = 1..deg
    const Scalar shift = Scalar::uniformizer_pow(F, gpos);
    const std::int64_t deg = f.degree();
    std::vector<FpPoly> cs;
    cs.reserve(static_cast<std::size_t>(deg + 1));
    for (std::int64_t e = 0; e <= deg; ++e) {
        if (e == 0) {
            cs.push_back(FpPoly::constant(p, 0));
            continue;
        }
        const Scalar a = f.coeff(e);
        if (a.is_zero()) {
            cs.push_back(FpPoly::constant(p, 0));
            continue;
        }
        const std::vector<std::uint8_t> dig = fpt_digits(a * shift, S);
        std::vector<std::uint32_t> cvec(dig.begin(), dig.end());
        cs.push_back(FpPoly(static_cast<std::uint32_t>(p), cvec));
    }

    // histogram over the reversed-digit packing of
    // w(b) = t^{gpos}(f(b) - a_0) mod t^S
    std::vector<std::int64_t> H(static_cast<std::size_t>(N), 0);
    std::vector<std::uint32_t> bdig(static_cast<std::size_t>(S));
    for (std::int64_t idx = 0; idx < N; ++idx) {
        std::int64_t rem = idx;
        for (std::int64_t l = 0; l < S; ++l) {
            bdig[static_cast<std::size_t>(l)] = static_cast<std::uint32_t>(rem % p);
            rem /= p;
        }
        const FpPoly b(static_cast<std::uint32_t>(p), bdig);
        FpPoly acc = FpPoly::constant(p, 0);
        for (std::int64_t e = deg; e >= 1; --e) {
            acc = (acc * b).truncated(static_cast<std::size_t>(S)) +
                  cs[static_cast<std::size_t>(e)];
        }
        acc = (acc * b).truncated(static_cast<std::size_t>(S));
        std::uint64_t key = 0;
        std::uint64_t place = 1;
        for (std::int64_t l = 0; l < S; ++l) {
            key += static_cast<std::uint64_t>(acc.coeff(S - 1 - l)) * place;
            place *= static_cast<std::uint64_t>(p);
        }
        ++H[static_cast<std::size_t>(key)];
    }

    if (N <= kExactShellLimit) {
        // digits table for the mod-p pairing
        std::vector<std::int8_t> dig(static_cast<std::size_t>(N * S));
        for (std::int64_t i = 0; i < N; ++i) {
            std::int64_t rem = i;
            for (std::int64_t l = 0; l < S; ++l) {
                dig[static_cast<std::size_t>(i * S + l)] =
                    static_cast<std::int8_t>(rem % p);
                rem /= p;
            }
        }
        std::vector<std::complex<double>> zp(static_cast<std::size_t>(p));
        for (std::int64_t e = 0; e < p; ++e)
            zp[static_cast<std::size_t>(e)] = unit_root(e, p);
        std::vector<std::int64_t> cnt(static_cast<std::size_t>(p));
        bool all_zero = true;
        double sup = 0.0;
        for (std::int64_t u = 1; u < N; ++u) {
            if (u % p == 0) continue;
            std::fill(cnt.begin(), cnt.end(), 0);
            for (std::int64_t w = 0; w < N; ++w) {
                if (!H[static_cast<std::size_t>(w)]) continue;
                std::int64_t e = 0;
                for (std::int64_t l = 0; l < S; ++l)
                    e += static_cast<std::int64_t>(
                             dig[static_cast<std::size_t>(u * S + l)]) *
                         static_cast<std::int64_t>(
                             dig[static_cast<std::size_t>(w * S + l)]);
                cnt[static_cast<std::size_t>(e % p)] +=
                    H[static_cast<std::size_t>(w)];
            }
            bool zero = true;
            for (std::int64_t e = 1; e < p; ++e)
                if (cnt[static_cast<std::size_t>(e)] != cnt[0]) {
                    zero = false;
                    break;
                }
            if (zero) continue;
            all_zero = false;
            std::complex<double> acc(0.0, 0.0);
            for (std::int64_t e = 0; e < p; ++e)
                acc += static_cast<double>(cnt[static_cast<std::size_t>(e)]) *
                       zp[static_cast<std::size_t>(e)];
            sup = std::max(sup, std::abs(acc));
        }
        if (all_zero) {
            out.sup = 0.0;
            out.err = 0.0;
            out.exact_zero = true;
            return out;
        }
        out.sup = sup / static_cast<double>(N);
        out.err = std::ldexp(1.0, -40);
        return out;
    }

    std::vector<std::complex<double>> A(static_cast<std::size_t>(N));
    for (std::int64_t w = 0; w < N; ++w)
        A[static_cast<std::size_t>(w)] = {
            static_cast<double>(H[static_cast<std::size_t>(w)]), 0.0};
    group_dft_p(A, p, S);
    double sup = 0.0;
    for (std::int64_t u = 0; u < N; ++u)
        if (u % p != 0)
            sup = std::max(sup, std::abs(A[static_cast<std::size_t>(u)]));
    out.sup = sup / static_cast<double>(N);
    out.err = std::ldexp(1.0, -40) +
              static_cast<double>(S) * static_cast<double>(p) *
                  std::ldexp(1.0, -50);
    return out;
}

// ---------------------------------------------------------------------------
// multivariate shell supremum (n components, d variables)
// ---------------------------------------------------------------------------

// true when f is (x, x^2, x^3) with unit coefficients in one variable: the
// translation x -> x + b then acts on the dual tuple v by the unipotent map
// (v_1, v_2, v_3) -> (v_1 + 2b v_2 + 3b^2 v_3, v_2 + 3b v_3, v_3), which
// preserves shells and |I|, so v_2 only needs representatives modulo the
// subgroup 3 v_3 (Z/p^S)
bool moment_curve_shape(const VectorPhase& f) {
    if (f.field.kind() != FieldKind::Qp) return false;
    if (f.d != 1u || f.n() != 3u) return false;
    for (std::size_t l = 0; l < 3; ++l) {
        const auto& terms = f.components[l].terms();
        if (terms.size() != 1) return false;
        const auto& [alpha, c] = *terms.begin();
        if (alpha.size() != 1 ||
            alpha[0] != static_cast<std::int64_t>(l) + 1)
            return false;
        if (!c.is_one()) return false;
    }
    return true;
}

ShellOut shell_multi(const VectorPhase& f, std::int64_t j, std::int64_t cap,
                     int threads) {
    const FieldSpec& F = f.field;
    const std::int64_t p = F.p();
    const bool fpt = F.kind() == FieldKind::FpT;
    const std::int64_t n = static_cast<std::int64_t>(f.n());
    const std::int64_t d = static_cast<std::int64_t>(f.d);
    if (n < 1 || d < 1) throw DomainError("shell supremum: empty phase map");
    ShellOut out;

    Valuation nc = Valuation::infinity();
    for (const auto& comp : f.components)
        nc = min(nc, comp.gauss_norm_exponent_nonconstant());
    if (!nc.is_finite()) {
        out.sup = 1.0;
        out.level = std::max<std::int64_t>(j + 1, 0);
        return out;
    }
    const std::int64_t gpos = std::max<std::int64_t>(0, -nc.value());
    const std::int64_t S = j + 1 + gpos;
    out.level = S;
    if (S < 1) {
        out.sup = 1.0;
        return out;
    }
    const std::int64_t N =
        checked_pow_i64(p, S, cap, "shell level exceeds coset cap");
    const std::int64_t B =
        checked_pow_i64(p, S * d, cap, "inner coset count exceeds cap");
    const std::uint64_t uN = static_cast<std::uint64_t>(N);

    // reduced per-component tables W_l over the B inner points
    const Scalar shift = Scalar::uniformizer_pow(F, gpos);
    std::vector<std::vector<std::uint32_t>> W(
        static_cast<std::size_t>(n),
        std::vector<std::uint32_t>(static_cast<std::size_t>(B), 0));
    if (static_cast<std::uint64_t>(N) >> 32)
        throw ResourceLimit("shell level exceeds the 32-bit table range",
                            static_cast<double>(N), 4294967296.0);

    if (!fpt) {
        // monomial residues per component
        struct Mono {
            std::vector<std::int64_t> alpha;
            std::uint64_t c;
        };
        std::vector<std::vector<Mono>> monos(static_cast<std::size_t>(n));
        for (std::int64_t l = 0; l < n; ++l) {
            for (const auto& [alpha, c] :
                 f.components[static_cast<std::size_t>(l)].terms()) {
                bool constant = true;
                for (std::int64_t a : alpha)
                    if (a != 0) constant = false;
                if (constant) continue;
                monos[static_cast<std::size_t>(l)].push_back(
                    Mono{alpha, qp_residue(c * shift, S)});
            }
        }
        std::vector<std::uint64_t> bv(static_cast<std::size_t>(d));
        for (std::int64_t t = 0; t < B; ++t) {
            std::int64_t rem = t;
            for (std::int64_t v = 0; v < d; ++v) {
                bv[static_cast<std::size_t>(v)] =
                    static_cast<std::uint64_t>(rem % N);
                rem /= N;
            }
            for (std::int64_t l = 0; l < n; ++l) {
                std::uint64_t acc = 0;
                for (const Mono& mo : monos[static_cast<std::size_t>(l)]) {
                    std::uint64_t term = mo.c;
                    for (std::int64_t v = 0; v < d; ++v)
                        if (mo.alpha[static_cast<std::size_t>(v)] != 0)
                            term = mulmod_u64(
                                term,
                                powmod_u64(bv[static_cast<std::size_t>(v)],
                                           static_cast<std::uint64_t>(
                                               mo.alpha[static_cast<std::size_t>(
                                                   v)]),
                                           uN),
                                uN);
                    acc = (acc + term) % uN;
                }
                W[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)] =
                    static_cast<std::uint32_t>(acc);
            }
        }
    } else {
        // F_p((t)): W_l stores the reversed-digit packing of the truncated
        // series, so the character exponent is the digitwise dot with v_l
        std::vector<std::vector<std::pair<std::vector<std::int64_t>, FpPoly>>>
            monos(static_cast<std::size_t>(n));
        for (std::int64_t l = 0; l < n; ++l) {
            for (const auto& [alpha, c] :
                 f.components[static_cast<std::size_t>(l)].terms()) {
                bool constant = true;
                for (std::int64_t a : alpha)
                    if (a != 0) constant = false;
                if (constant) continue;
                const std::vector<std::uint8_t> digc = fpt_digits(c * shift, S);
                std::vector<std::uint32_t> cvec(digc.begin(), digc.end());
                monos[static_cast<std::size_t>(l)].emplace_back(
                    alpha, FpPoly(static_cast<std::uint32_t>(p), cvec));
            }
        }
        std::vector<FpPoly> bv;
        std::vector<std::uint32_t> digits(static_cast<std::size_t>(S));
        for (std::int64_t t = 0; t < B; ++t) {
            bv.clear();
            std::int64_t rem = t;
            for (std::int64_t v = 0; v < d; ++v) {
                std::int64_t idx = rem % N;
                rem /= N;
                for (std::int64_t l = 0; l < S; ++l) {
                    digits[static_cast<std::size_t>(l)] =
                        static_cast<std::uint32_t>(idx % p);
                    idx /= p;
                }
                bv.push_back(FpPoly(static_cast<std::uint32_t>(p), digits));
            }
            for (std::int64_t l = 0; l < n; ++l) {
                FpPoly acc = FpPoly::constant(p, 0);
                for (const auto& [alpha, c] :
                     monos[static_cast<std::size_t>(l)]) {
                    FpPoly term = c;
                    for (std::int64_t v = 0; v < d; ++v)
                        for (std::int64_t rep = 0;
                             rep < alpha[static_cast<std::size_t>(v)]; ++rep)
                            term = (term * bv[static_cast<std::size_t>(v)])
                                       .truncated(static_cast<std::size_t>(S));
                    acc = acc + term;
                }
                std::uint64_t key = 0;
                std::uint64_t place = 1;
                for (std::int64_t l2 = 0; l2 < S; ++l2) {
                    key += static_cast<std::uint64_t>(acc.coeff(S - 1 - l2)) *
                           place;
                    place *= static_cast<std::uint64_t>(p);
                }
                W[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)] =
                    static_cast<std::uint32_t>(key);
            }
        }
    }

    // outer tuples (v_2 .. v_n), each in [0, N)
    std::vector<std::uint32_t> tuples;  // flattened, stride n-1
    const std::int64_t stride = n - 1;
    if (moment_curve_shape(f)) {
        for (std::int64_t u3 = 0; u3 < N; ++u3) {
            const std::int64_t g3 = (3 * u3) % N;
            std::int64_t lim = 1;
            if (g3 == 0) {
                lim = N;
            } else {
                std::int64_t e = 0;
                std::int64_t g = g3;
                while (g % p == 0) {
                    ++e;
                    g /= p;
                }
                lim = 1;
                for (std::int64_t i = 0; i < e; ++i) lim *= p;
            }
            for (std::int64_t u2 = 0; u2 < lim; ++u2) {
                tuples.push_back(static_cast<std::uint32_t>(u2));
                tuples.push_back(static_cast<std::uint32_t>(u3));
            }
        }
    } else if (n == 1) {
        // no outer coordinates: a single empty tuple, handled by stride == 0
    } else {
        __int128 total = 1;
        for (std::int64_t i = 0; i < stride; ++i) {
            total *= N;
            if (total > static_cast<__int128>(cap))
                throw ResourceLimit("outer tuple count exceeds cap",
                                    std::pow(static_cast<double>(N),
                                             static_cast<double>(stride)),
                                    static_cast<double>(cap));
        }
        const std::int64_t T = static_cast<std::int64_t>(total);
        tuples.reserve(static_cast<std::size_t>(T * stride));
        for (std::int64_t idx = 0; idx < T; ++idx) {
            std::int64_t rem = idx;
            for (std::int64_t i = 0; i < stride; ++i) {
                tuples.push_back(static_cast<std::uint32_t>(rem % N));
                rem /= N;
            }
        }
    }
    const std::int64_t T =
        stride == 0 ? 1 : static_cast<std::int64_t>(tuples.size()) / stride;
    {
        const __int128 work = static_cast<__int128>(T) * B;
        if (work > static_cast<__int128>(cap))
            throw ResourceLimit("shell transform work exceeds cap",
                                static_cast<double>(T) *
                                    static_cast<double>(B),
                                static_cast<double>(cap));
    }

    // unit-root table for the outer exponent
    std::vector<std::complex<double>> zeta(
        static_cast<std::size_t>(fpt ? p : N));
    for (std::int64_t e = 0; e < (fpt ? p : N); ++e)
        zeta[static_cast<std::size_t>(e)] = unit_root(e, fpt ? p : N);

    const int workers = threads < 1 ? 1 : threads;
    const std::int64_t chunk_count =
        std::min<std::int64_t>(T, workers == 1 ? 1 : workers * 4);
    const std::int64_t per =
        chunk_count == 0 ? 0 : (T + chunk_count - 1) / chunk_count;

    std::vector<double> partial = parallel_map<double>(
        chunk_count, workers, [&](std::int64_t ci) -> double {
            std::vector<std::complex<double>> g(static_cast<std::size_t>(N));
            double local = 0.0;
            const std::int64_t lo = ci * per;
            const std::int64_t hi = std::min<std::int64_t>(T, lo + per);
            for (std::int64_t ti = lo; ti < hi; ++ti) {
                const std::uint32_t* tup =
                    stride == 0
                        ? nullptr
                        : &tuples[static_cast<std::size_t>(ti * stride)];
                std::fill(g.begin(), g.end(), std::complex<double>(0.0, 0.0));
                if (!fpt) {
                    for (std::int64_t t = 0; t < B; ++t) {
                        std::uint64_t e = 0;
                        for (std::int64_t l = 1; l < n; ++l)
                            e = (e + mulmod_u64(
                                         tup[l - 1],
                                         W[static_cast<std::size_t>(l)]
                                          [static_cast<std::size_t>(t)],
                                         uN)) %
                                uN;
                        g[W[0][static_cast<std::size_t>(t)]] +=
                            zeta[static_cast<std::size_t>(e)];
                    }
                    fft_radix_p(g, p);
                } else {
                    for (std::int64_t t = 0; t < B; ++t) {
                        std::int64_t e = 0;
                        for (std::int64_t l = 1; l < n; ++l) {
                            std::uint64_t a = tup[l - 1];
                            std::uint64_t b =
                                W[static_cast<std::size_t>(l)]
                                 [static_cast<std::size_t>(t)];
                            for (std::int64_t s2 = 0; s2 < S; ++s2) {
                                e += static_cast<std::int64_t>(a % p) *
                                     static_cast<std::int64_t>(b % p);
                                a /= static_cast<std::uint64_t>(p);
                                b /= static_cast<std::uint64_t>(p);
                            }
                        }
                        g[W[0][static_cast<std::size_t>(t)]] +=
                            zeta[static_cast<std::size_t>(e % p)];
                    }
                    group_dft_p(g, p, S);
                }
                bool outer_unit = false;
                for (std::int64_t l = 0; l < stride; ++l)
                    if (tup[l] % p != 0) outer_unit = true;
                for (std::int64_t v1 = 0; v1 < N; ++v1) {
                    if (!outer_unit && v1 % p == 0) continue;
                    local = std::max(
                        local, std::abs(g[static_cast<std::size_t>(v1)]));
                }
            }
            return local;
        });

    double sup = 0.0;
    for (double v : partial) sup = std::max(sup, v);
    out.sup = sup / static_cast<double>(B);
    out.err = std::ldexp(1.0, -40) +
              static_cast<double>(S) * static_cast<double>(p) *
                  std::ldexp(1.0, -50);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// exact integral evaluation
// ---------------------------------------------------------------------------

std::int64_t integral_level(const Phase& f, const Scalar& y) {
    if (y.is_zero()) return 0;
    const Valuation nc = f.gauss_norm_exponent_nonconstant();
    const Valuation part = y.valuation() + nc;
    if (!part.is_finite()) return 0;
    const std::int64_t m = 1 - part.value();
    return m > 0 ? m : 0;
}

std::int64_t integral_level(const VectorPhase& f,
                            const std::vector<Scalar>& y) {
    if (y.size() != f.n())
        throw DomainError("integral_level: y arity mismatch");
    Valuation part = Valuation::infinity();
    for (std::size_t l = 0; l < y.size(); ++l) {
        if (y[l].is_zero()) continue;
        part = min(part, y[l].valuation() +
                             f.components[l].gauss_norm_exponent_nonconstant());
    }
    if (!part.is_finite()) return 0;
    const std::int64_t m = 1 - part.value();
    return m > 0 ? m : 0;
}

CharacterSum eval_integral(const Phase& f, const Scalar& y, std::int64_t cap,
                           std::int64_t level_override, int threads) {
    const FieldSpec& F = f.field();
    const std::int64_t m =
        level_override >= 0 ? level_override : integral_level(f, y);
    const std::vector<Scalar> reps = coset_representatives(F, m, cap);
    const std::int64_t count = static_cast<std::int64_t>(reps.size());
    const int workers = threads < 1 ? 1 : threads;
    const std::int64_t chunk_count =
        std::min<std::int64_t>(count, workers == 1 ? 1 : workers * 4);
    const std::int64_t per = (count + chunk_count - 1) / chunk_count;
    std::vector<CharacterSum> partial = parallel_map<CharacterSum>(
        chunk_count, workers, [&](std::int64_t ci) -> CharacterSum {
            CharacterSum local(F, m);
            const std::int64_t lo = ci * per;
            const std::int64_t hi = std::min<std::int64_t>(count, lo + per);
            for (std::int64_t i = lo; i < hi; ++i)
                local.add_term(
                    character(y * f.eval(reps[static_cast<std::size_t>(i)])));
            return local;
        });
    CharacterSum outsum(F, m);
    for (const CharacterSum& c : partial) outsum = outsum + c;
    return outsum;
}

CharacterSum eval_integral_multi(const VectorPhase& f,
                                 const std::vector<Scalar>& y,
                                 std::int64_t cap, std::int64_t level_override,
                                 int threads) {
    const FieldSpec& F = f.field;
    const std::int64_t n = static_cast<std::int64_t>(f.n());
    const std::int64_t d = static_cast<std::int64_t>(f.d);
    if (static_cast<std::int64_t>(y.size()) != n)
        throw DomainError("eval_integral_multi: y arity mismatch");
    const std::int64_t m =
        level_override >= 0 ? level_override : integral_level(f, y);
    const std::vector<Scalar> reps = coset_representatives(F, m, cap);
    const std::int64_t per_var = static_cast<std::int64_t>(reps.size());
    __int128 tot = 1;
    for (std::int64_t v = 0; v < d; ++v) {
        tot *= per_var;
        if (tot > static_cast<__int128>(cap))
            throw ResourceLimit("eval_integral_multi: coset count over cap",
                                std::pow(static_cast<double>(per_var),
                                         static_cast<double>(d)),
                                static_cast<double>(cap));
    }
    const std::int64_t total = static_cast<std::int64_t>(tot);
    const int workers = threads < 1 ? 1 : threads;
    const std::int64_t chunk_count =
        std::min<std::int64_t>(total, workers == 1 ? 1 : workers * 4);
    const std::int64_t per = (total + chunk_count - 1) / chunk_count;
    std::vector<CharacterSum> partial = parallel_map<CharacterSum>(
        chunk_count, workers, [&](std::int64_t ci) -> CharacterSum {
            CharacterSum local(F, m * d);
            std::vector<Scalar> x(static_cast<std::size_t>(d),
                                  Scalar::zero(F));
            const std::int64_t lo = ci * per;
            const std::int64_t hi = std::min<std::int64_t>(total, lo + per);
            for (std::int64_t idx = lo; idx < hi; ++idx) {
                std::int64_t rem = idx;
                for (std::int64_t v = 0; v < d; ++v) {
                    x[static_cast<std::size_t>(v)] =
                        reps[static_cast<std::size_t>(rem % per_var)];
                    rem /= per_var;
                }
                Scalar dot = Scalar::zero(F);
                for (std::int64_t l = 0; l < n; ++l) {
                    if (y[static_cast<std::size_t>(l)].is_zero()) continue;
                    dot = dot + y[static_cast<std::size_t>(l)] *
                                    f.components[static_cast<std::size_t>(l)]
                                        .eval(x);
                }
                local.add_term(character(dot));
            }
            return local;
        });
    CharacterSum outsum(F, m * d);
    for (const CharacterSum& c : partial) outsum = outsum + c;
    return outsum;
}

// ---------------------------------------------------------------------------
// decay profiles
// ---------------------------------------------------------------------------

double DecayTable::max_ratio() const {
    double r = 0.0;
    for (const DecayRow& row : rows) r = std::max(r, row.ratio);
    return r;
}

std::string DecayTable::to_csv() const {
    std::string out = "j,shell_size,sup_norm,error_bound,ratio\n";
    for (const DecayRow& row : rows) {
        out += std::to_string(row.j);
        out += ',';
        out += std::to_string(row.shell_size);
        out += ',';
        out += fmt9(row.sup_norm);
        out += ',';
        out += fmt9(row.error_bound);
        out += ',';
        out += fmt9(row.ratio);
        out += '\n';
    }
    return out;
}

namespace {

DecayRow make_row(const FieldSpec& F, std::int64_t n, std::int64_t j,
                  std::int64_t k, const ShellOut& s) {
    DecayRow row;
    row.j = j;
    row.shell_size = shell_rep_count(F.p(), s.level, n);
    row.sup_norm = s.sup;
    row.error_bound = s.err;
    row.exact_zero = s.exact_zero;
    const double q = static_cast<double>(F.residue_cardinality());
    row.ratio = s.sup * std::pow(q, static_cast<double>(j) /
                                        static_cast<double>(k));
    return row;
}

}  // namespace

DecayTable decay_profile(const Phase& f, std::int64_t k, std::int64_t j_min,
                         std::int64_t j_max, std::int64_t cap, int threads) {
    if (k < 1) throw DomainError("decay_profile: exponent k must be >= 1");
    (void)threads;
    DecayTable table;
    table.k = k;
    for (std::int64_t j = j_min; j <= j_max; ++j) {
        const ShellOut s = f.field().kind() == FieldKind::Qp
                               ? shell_uni_qp(f, j, cap)
                               : shell_uni_fpt(f, j, cap);
        table.rows.push_back(make_row(f.field(), 1, j, k, s));
    }
    return table;
}

DecayTable decay_profile(const VectorPhase& f, std::int64_t k,
                         std::int64_t j_min, std::int64_t j_max,
                         std::int64_t cap, int threads) {
    if (k < 1) throw DomainError("decay_profile: exponent k must be >= 1");
    DecayTable table;
    table.k = k;
    for (std::int64_t j = j_min; j <= j_max; ++j) {
        const ShellOut s = shell_multi(f, j, cap, threads);
        table.rows.push_back(
            make_row(f.field, static_cast<std::int64_t>(f.n()), j, k, s));
    }
    return table;
}

RogersResult rogers_check(const Phase& f, std::int64_t j, std::int64_t j_max,
                          std::int64_t cap, int threads) {
    const FieldSpec& F = f.field();
    if (F.kind() != FieldKind::Qp)
        throw DomainError("rogers_check: needs a characteristic-zero field");
    const Phase fj = f.derivative(j);
    if (fj.is_constant())
        throw DomainError("rogers_check: derivative of order j is constant");
    const RegularityData reg = regular_degree(fj);
    RogersResult R;
    R.m = j + reg.d;
    if (R.m < 1) throw DomainError("rogers_check: nonpositive exponent order");
    R.table = decay_profile(f, R.m, 0, j_max, cap, threads);
    R.max_ratio = R.table.max_ratio();
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < R.table.rows.size(); ++i)
        if (R.table.rows[i].ratio > R.table.rows[argmax].ratio) argmax = i;
    R.holds = R.table.rows.size() <= 1 || argmax + 1 < R.table.rows.size();
    const Valuation nc = f.gauss_norm_exponent_nonconstant();
    R.gauss_exponent = nc.is_finite() ? -nc.value() : 0;
    try {
        const SpNumberResult sp = sp_number(f.derivative(R.m - 1));
        if (sp.infinite)
            R.sp_note = "sp_number(f^(m-1)) = +inf";
        else if (sp.decided)
            R.sp_note = "sp_number(f^(m-1)) = " + std::to_string(sp.r);
        else
            R.sp_note = "sp_number(f^(m-1)) undecided: " + sp.note;
    } catch (const std::exception& e) {
        R.sp_note = std::string("sp_number(f^(m-1)) unavailable: ") + e.what();
    }
    return R;
}

}  // namespace nonarch
