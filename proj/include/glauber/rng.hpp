#pragma once

// Seeded, splittable PRNG used by every randomized component.
//
// All bounded/real draws are implemented by hand on top of the raw 64-bit
// stream so that outputs are byte-identical across standard libraries
// (std::uniform_int_distribution is implementation-defined).  Experiment
// records store (kName, seed); replaying with the same pair reproduces every
// draw exactly.

#include <cmath>
#include <cstdint>
#include <random>

namespace glauber {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    static constexpr const char* kName = "mt19937_64+splitmix64-split";

    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    // Independent child stream; deterministic function of (seed, stream).
    Rng split(std::uint64_t stream) const {
        return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x517cc1b727220a95ULL)));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Unbiased draw in [0, m), rejection method.
    std::uint64_t uniform_below(std::uint64_t m) {
        const std::uint64_t threshold = (0 - m) % m;
        for (;;) {
            std::uint64_t r = gen_();
            if (r >= threshold) return r % m;
        }
    }

    int uniform_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(uniform_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double uniform01() {  // [0, 1), 53-bit mantissa
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double exponential(double rate) {
        return -std::log1p(-uniform01()) / rate;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace glauber
