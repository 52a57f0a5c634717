#pragma once

// Counter-based pseudo-random stream.
//
// Draw i of a stream keyed by k is splitmix64_mix(k + (i + 1) * 0x9E3779B97F4A7C15),
// i.e. SplitMix64 evaluated at an explicit counter. Doubles take the top 53
// bits. Every distribution used by the generator is derived here rather than
// through <random> distributions, whose output differs between standard
// libraries.

#include <cstdint>
#include <span>
#include <stdexcept>

namespace planwright {

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class RandomStream {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit RandomStream(std::uint64_t seed) : key_(splitmix64_mix(seed ^ 0x5057u)) {}

    /// Independent stream for attempt/purpose `index`.
    RandomStream substream(std::uint64_t index) const {
        RandomStream s(0);
        s.key_ = splitmix64_mix(key_ ^ splitmix64_mix(index + kGamma));
        return s;
    }

    std::uint64_t next_u64() {
        ++counter_;
        return splitmix64_mix(key_ + counter_ * kGamma);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi); returns lo when lo == hi.
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, bound] (inclusive).
    std::uint64_t uniform_int(std::uint64_t bound) {
        if (bound == UINT64_MAX) return next_u64();
        const std::uint64_t range = bound + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        for (;;) {
            const std::uint64_t v = next_u64();
            if (v < limit) return v % range;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

    /// Index drawn proportionally to non-negative weights.
    std::size_t discrete(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (!(total > 0.0)) throw std::invalid_argument("discrete: weights sum to zero");
        const double u = next_double() * total;
        double acc = 0.0;
        std::size_t last = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] <= 0.0) continue;
            acc += weights[i];
            last = i;
            if (u < acc) return i;
        }
        return last;
    }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace planwright
