#pragma once

#include <cstdint>
#include <vector>

namespace nonarch {

/**
 * splitmix64: tiny, fast, and fully specified, so seeded runs are
 * reproducible across platforms and standard-library versions (std::
 * distributions are implementation-defined and must not appear anywhere
 * results are recorded).
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n) by rejection (exact, no modulo bias); n > 0
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~0ULL) / n);  // largest multiple of n that fits
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    /// signed uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

    /// derive an independent stream (for per-trial sub-generators)
    SplitMix64 fork() { return SplitMix64(next() ^ 0xd1b54a32d192ed03ULL); }

private:
    std::uint64_t state_;
};

}  // namespace nonarch
