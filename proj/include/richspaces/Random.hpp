#pragma once

#include <cstdint>
#include <string_view>

namespace richspaces {

// xoshiro256** seeded through splitmix64. Self-contained so that streams are
// identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t u64();

    // Unbiased integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n);

    // Inclusive integer range.
    int range(int lo, int hi);

    // [0, 1)
    double real01();

    double real(double lo, double hi);

    double gaussian(double mean, double stddev);

    // True with probability p.
    bool chance(double p);

private:
    std::uint64_t state_[4];
    bool hasSpare_ = false;
    double spare_ = 0.0;
};

// Stable sub-seed derivation: one global seed plus a label per consumer, so
// adding a new consumer never perturbs another's stream.
std::uint64_t deriveSeed(std::uint64_t base, std::string_view label);

} // namespace richspaces
