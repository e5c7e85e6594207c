#include "richspaces/Random.hpp"

#include <cmath>

namespace richspaces {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t Rng::u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t n) {
    // Rejection sampling to stay unbiased.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = u64();
    while (v >= limit) v = u64();
    return v % n;
}

int Rng::range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::real01() {
    return static_cast<double>(u64() >> 11) * 0x1.0p-53;
}

double Rng::real(double lo, double hi) {
    return lo + (hi - lo) * real01();
}

double Rng::gaussian(double mean, double stddev) {
    if (hasSpare_) {
        hasSpare_ = false;
        return mean + stddev * spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * real01() - 1.0;
        v = 2.0 * real01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    hasSpare_ = true;
    return mean + stddev * u * m;
}

bool Rng::chance(double p) {
    return real01() < p;
}

std::uint64_t deriveSeed(std::uint64_t base, std::string_view label) {
    // FNV-1a over the label, mixed with the base through splitmix.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::uint64_t s = base ^ h;
    return splitmix64(s);
}

} // namespace richspaces
