#pragma once

#include <cstdint>

namespace penta {

/// Deterministic splitmix64 stream. Sampling code derives one stream per
/// (seed, sample index) pair so results are reproducible and independent of
/// evaluation order; no standard-library distributions are used because
/// their output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    /// Stream for sample `index` of run `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ mix(index + 0x9e3779b97f4a7c15ULL));
        r.next();
        return r;
    }

    std::uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ULL;
        return mix(s_);
    }
    /// Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
    /// Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    /// Uniform double in (0, 1).
    double unit() {
        double v = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return v == 0.0 ? 0x1.0p-53 : v;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t s_;
};

}  // namespace penta
