#ifndef HYPERTRI_RNG_HPP
#define HYPERTRI_RNG_HPP

#include <cstdint>
#include <random>

namespace hypertri {

// Deterministic 64-bit generator. All estimator randomness flows from one
// seed so a run is reproducible bit for bit across platforms: mt19937_64 is
// fully specified by the standard, and the draw helpers below avoid the
// implementation-defined std:: distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_double() < p; }

    // Uniform index in [0, n) via unbiased bounded rejection. n must be > 0.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hypertri

#endif  // HYPERTRI_RNG_HPP
