#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "yardalloc/core.hpp"

namespace yardalloc {

/// Seeded random source with portable derived draws. std::mt19937_64's raw
/// output is pinned by the standard, but the distribution adaptors are not,
/// so bounded(), unit_real() and shuffle() are implemented here to keep runs
/// byte-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) throw config_error("bounded() needs n > 0");
        std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw config_error("between() needs lo <= hi");
        return lo + static_cast<std::int64_t>(
                        bounded(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double unit_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Bernoulli draw.
    bool chance(double p) { return unit_real() < p; }

    /// Fisher-Yates shuffle, portable unlike std::shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

    /// Uniformly chosen element.
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        if (v.empty()) throw config_error("pick() needs a non-empty vector");
        return v[static_cast<std::size_t>(bounded(v.size()))];
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace yardalloc
