#pragma once

#include "richspaces/Evolve.hpp"
#include "richspaces/Image.hpp"
#include "richspaces/Random.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace richspaces {

// Rule of a fashion-based CA: scores[a][b] is what a cell in state a earns
// against a neighbor in state b. Closed under weighted averaging, which is
// what makes the representation convex.
struct CompetitionMatrix {
    int nStates = 0;
    std::vector<double> scores; // row-major n x n

    double at(int a, int b) const { return scores[static_cast<std::size_t>(a) * nStates + b]; }
    double& at(int a, int b) { return scores[static_cast<std::size_t>(a) * nStates + b]; }

    void validate() const;
    friend bool operator==(const CompetitionMatrix&, const CompetitionMatrix&) = default;
};

struct StateGrid {
    int width = 0, height = 0;
    std::vector<std::uint8_t> states; // row-major

    std::uint8_t at(int x, int y) const { return states[static_cast<std::size_t>(y) * width + x]; }
};

struct CavernMap {
    int width = 0, height = 0;
    std::vector<std::uint8_t> passable; // 1 = floor (state 0), 0 = rock

    bool at(int x, int y) const { return passable[static_cast<std::size_t>(y) * width + x] != 0; }
};

CompetitionMatrix randomMatrix(int nStates, Rng& rng); // unit Gaussian entries
CompetitionMatrix parseMatrix(const std::string& text);
std::string formatMatrix(const CompetitionMatrix& m);

StateGrid randomStateGrid(int width, int height, int nStates, std::uint64_t seed);

// Synchronous update on a torus: every cell scores against its 8 Moore
// neighbors, then adopts the state of the highest-scoring cell in its closed
// neighborhood. Ties go to the smallest row-major cell index.
StateGrid update(const StateGrid& grid, const CompetitionMatrix& m);

// Same dynamics with a per-column rule (used by the morph rendering).
StateGrid updatePerColumn(const StateGrid& grid, std::span<const CompetitionMatrix> columnRules);

// Entrywise (1-t)*a + t*b; exact at the endpoints.
CompetitionMatrix weightedAverage(const CompetitionMatrix& a, const CompetitionMatrix& b, double t);

CavernMap generateMap(const CompetitionMatrix& m, int width, int height, int steps,
                      std::uint64_t seed);

struct FloorBounds {
    double lo = 0.3, hi = 0.7;
};

// 0 outside the floor-fraction bounds, otherwise the size of the largest
// 4-connected floor component.
double mapFitness(const CavernMap& map, FloorBounds bounds = {});

// Rule used by column x of a width-wide morph: t = x / (width - 1), with a
// single column defined as t = 0.
CompetitionMatrix morphColumnMatrix(const CompetitionMatrix& a, const CompetitionMatrix& b,
                                    int width, int column);

StateGrid runMorph(const CompetitionMatrix& a, const CompetitionMatrix& b, int width, int height,
                   int steps, std::uint64_t seed);

struct CoevolveParams {
    int nStates = 4;
    int mapWidth = 32, mapHeight = 32;
    int steps = 20;
    std::uint64_t mapSeed = 0;   // one fixed grid seed keeps the objective deterministic
    std::vector<double> tSamples; // e.g. 0, 0.1, ..., 1
    FloorBounds bounds;
    double mutationSigma = 0.35;
};

struct CoevolveResult {
    CompetitionMatrix a, b;
    double minFitness = 0.0; // min over tSamples for the returned pair
    std::vector<GenerationStats> trace;
};

// Evolves a pair of matrices so the whole weighted-average segment between
// them produces good maps: maximizes min over t of the map fitness.
CoevolveResult coevolvePair(const EvolutionConfig& config, const CoevolveParams& params);

double pairSegmentFitness(const CompetitionMatrix& a, const CompetitionMatrix& b,
                          const CoevolveParams& params);

Image renderStateGrid(const StateGrid& grid);
Image renderCavern(const CavernMap& map);

} // namespace richspaces
