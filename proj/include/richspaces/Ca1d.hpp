#pragma once

#include "richspaces/Image.hpp"
#include "richspaces/Random.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace richspaces {

inline constexpr int kCaStates = 8;          // cell states 0..7, 0 quiescent
inline constexpr int kCaRadius = 2;          // 5-cell neighborhood
inline constexpr int kRuleEntries = 36;      // neighborhood sums 0..35

// Totalistic next-state lookup indexed by the 5-cell neighborhood sum.
// Entry 0 is pinned to 0 so an all-quiescent neighborhood stays quiescent.
struct ApoptoticRule {
    std::array<std::uint8_t, kRuleEntries> entries{};

    void validate() const; // throws on violated invariants
};

// Entry 0 stays 0, the remaining 35 entries uniform over [0, 8).
ApoptoticRule randomRule(Rng& rng);

// Entry 0 stays 0; each other entry is 0 with probability zeroProb, otherwise
// uniform over [1, 8). Useful as an initial population: uniform rules almost
// never die inside the arena, while zero-heavy rules often do.
ApoptoticRule sparseRandomRule(Rng& rng, double zeroProb);

ApoptoticRule parseRule(const std::string& text);
std::string formatRule(const ApoptoticRule& rule);

struct Arena {
    int width = 201;
    int height = 201;
};

struct TimeHistory {
    int width = 0;
    int height = 0;                  // one row per time step
    std::vector<std::uint8_t> cells; // row-major
    std::optional<int> diedAt;       // first all-quiescent row, if any

    std::uint8_t at(int x, int row) const {
        return cells[static_cast<std::size_t>(row) * width + x];
    }
};

// One synchronous update. Cells outside the arena contribute 0 to sums.
std::vector<std::uint8_t> step(std::span<const std::uint8_t> row, const ApoptoticRule& rule);

// From a single centered seed cell; rows after death stay all-quiescent.
TimeHistory simulate(const ApoptoticRule& rule, Arena arena, int seedState = 1);

// Count of non-quiescent cells over the whole history if the automaton dies
// within the arena, 0 if it is still alive on the last row.
long long evaluateFitness(const ApoptoticRule& rule, Arena arena, int seedState = 1);

std::array<Rgb, kCaStates> defaultCaPalette();

Image renderHistory(const TimeHistory& history,
                    std::span<const Rgb> palette = std::span<const Rgb>{});

} // namespace richspaces
