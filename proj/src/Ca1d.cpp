#include "richspaces/Ca1d.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace richspaces {

void ApoptoticRule::validate() const {
    if (entries[0] != 0) throw std::invalid_argument("rule entry 0 must be 0");
    for (std::uint8_t e : entries)
        if (e >= kCaStates) throw std::invalid_argument("rule entry out of range");
}

ApoptoticRule randomRule(Rng& rng) {
    ApoptoticRule rule;
    rule.entries[0] = 0;
    for (int i = 1; i < kRuleEntries; ++i)
        rule.entries[i] = static_cast<std::uint8_t>(rng.below(kCaStates));
    return rule;
}

ApoptoticRule sparseRandomRule(Rng& rng, double zeroProb) {
    ApoptoticRule rule;
    rule.entries[0] = 0;
    for (int i = 1; i < kRuleEntries; ++i) {
        rule.entries[i] = rng.chance(zeroProb)
                              ? 0
                              : static_cast<std::uint8_t>(1 + rng.below(kCaStates - 1));
    }
    return rule;
}

ApoptoticRule parseRule(const std::string& text) {
    std::istringstream in(text);
    ApoptoticRule rule;
    for (int i = 0; i < kRuleEntries; ++i) {
        int v;
        if (!(in >> v)) throw std::runtime_error("rule needs 36 integers");
        if (v < 0 || v >= kCaStates) throw std::runtime_error("rule entry out of range");
        rule.entries[i] = static_cast<std::uint8_t>(v);
    }
    int extra;
    if (in >> extra) throw std::runtime_error("rule has trailing values");
    rule.validate();
    return rule;
}

std::string formatRule(const ApoptoticRule& rule) {
    std::ostringstream out;
    for (int i = 0; i < kRuleEntries; ++i) {
        if (i) out << ' ';
        out << int(rule.entries[i]);
    }
    out << '\n';
    return out.str();
}

std::vector<std::uint8_t> step(std::span<const std::uint8_t> row, const ApoptoticRule& rule) {
    const int n = static_cast<int>(row.size());
    std::vector<std::uint8_t> next(row.size());
    for (int i = 0; i < n; ++i) {
        int sum = 0;
        for (int d = -kCaRadius; d <= kCaRadius; ++d) {
            const int j = i + d;
            if (j >= 0 && j < n) {
                const std::uint8_t s = row[j];
                if (s >= kCaStates) throw std::invalid_argument("cell state out of range");
                sum += s;
            }
        }
        next[i] = rule.entries[sum];
    }
    return next;
}

namespace {

bool allQuiescent(std::span<const std::uint8_t> row) {
    return std::all_of(row.begin(), row.end(), [](std::uint8_t s) { return s == 0; });
}

void validateSeed(int seedState) {
    if (seedState < 1 || seedState >= kCaStates)
        throw std::invalid_argument("seed state must be in [1, 8)");
}

} // namespace

TimeHistory simulate(const ApoptoticRule& rule, Arena arena, int seedState) {
    rule.validate();
    validateSeed(seedState);
    if (arena.width < 1 || arena.height < 1)
        throw std::invalid_argument("arena dimensions must be positive");

    TimeHistory h;
    h.width = arena.width;
    h.height = arena.height;
    h.cells.assign(static_cast<std::size_t>(arena.width) * arena.height, 0);
    h.cells[arena.width / 2] = static_cast<std::uint8_t>(seedState);

    std::vector<std::uint8_t> row(h.cells.begin(), h.cells.begin() + arena.width);
    for (int r = 1; r < arena.height; ++r) {
        row = step(row, rule);
        if (allQuiescent(row)) {
            h.diedAt = r;
            return h; // remaining rows stay zero: quiescence is absorbing
        }
        std::copy(row.begin(), row.end(), h.cells.begin() + static_cast<std::size_t>(r) * arena.width);
    }
    return h;
}

long long evaluateFitness(const ApoptoticRule& rule, Arena arena, int seedState) {
    rule.validate();
    validateSeed(seedState);
    if (arena.width < 1 || arena.height < 1)
        throw std::invalid_argument("arena dimensions must be positive");

    std::vector<std::uint8_t> row(static_cast<std::size_t>(arena.width), 0);
    row[arena.width / 2] = static_cast<std::uint8_t>(seedState);
    long long live = 1;
    for (int r = 1; r < arena.height; ++r) {
        row = step(row, rule);
        bool dead = true;
        for (std::uint8_t s : row) {
            if (s != 0) {
                dead = false;
                ++live;
            }
        }
        if (dead) return live; // died inside the arena
    }
    return 0; // still alive on the last row: grew too long
}

std::array<Rgb, kCaStates> defaultCaPalette() {
    return {Rgb{255, 255, 255}, Rgb{0, 0, 0},     Rgb{204, 41, 41},  Rgb{41, 112, 204},
            Rgb{38, 166, 74},   Rgb{235, 177, 30}, Rgb{150, 46, 188}, Rgb{22, 184, 184}};
}

Image renderHistory(const TimeHistory& history, std::span<const Rgb> palette) {
    const auto fallback = defaultCaPalette();
    if (palette.empty()) palette = fallback;
    if (palette.size() < kCaStates) throw std::invalid_argument("palette needs 8 colors");
    Image img(history.width, history.height, palette[0]);
    for (int r = 0; r < history.height; ++r)
        for (int x = 0; x < history.width; ++x)
            img.at(x, r) = palette[history.at(x, r)];
    return img;
}

} // namespace richspaces
