#pragma once

#include "richspaces/Ca1d.hpp"
#include "richspaces/Random.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace richspaces {

// Fixed-length integer gene. Locked positions keep their values under every
// operator; for apoptotic rule genes position 0 is locked at 0.
struct Gene {
    std::vector<int> values;
    std::vector<std::size_t> locked; // sorted, unique

    friend bool operator==(const Gene&, const Gene&) = default;
};

struct GeneDomain {
    std::size_t length = 0;
    int minValue = 0;
    int maxValue = 0;
    std::vector<std::size_t> lockedPositions;
    std::vector<int> lockedValues;

    Gene random(Rng& rng) const;
    bool isLocked(std::size_t pos) const;
};

GeneDomain apoptoticDomain();
Gene ruleToGene(const ApoptoticRule& rule);
ApoptoticRule geneToRule(const Gene& gene);

// Children swap the segment [cut1, cut2); each child keeps its primary
// parent's values at locked positions.
std::pair<Gene, Gene> twoPointCrossover(const Gene& a, const Gene& b, std::size_t cut1,
                                        std::size_t cut2);

// Parent-derived child of two-point crossover against an immortal ancestor:
// parent's values outside [cut1, cut2), ancestor's inside.
Gene singleParentCrossover(const Gene& parent, const Gene& ancestor, std::size_t cut1,
                           std::size_t cut2);

Gene pointMutate(const Gene& g, std::size_t position, int newValue);

struct EvolutionConfig {
    int populationSize = 100;
    int generations = 100;
    int tournamentSize = 7;
    int mutationCount = 1;
    // Defaults to 0.5 when ancestors are supplied, 0 otherwise.
    std::optional<double> singleParentRate;
    std::uint64_t rngSeed = 0;

    void validate() const;
    double effectiveSingleParentRate(bool haveAncestors) const;
};

struct GenerationStats {
    int generation = 0;
    double best = 0.0;
    double mean = 0.0;
};

template <typename Genome>
struct EvolveResultT {
    Genome best{};
    double bestFitness = 0.0;
    std::vector<GenerationStats> trace;
};

using EvolveResult = EvolveResultT<Gene>;

// Hooks for instrumentation; onChild fires after crossover, before mutation.
template <typename Genome>
struct EngineHooks {
    std::function<void(const Genome& parent, const Genome& other, const Genome& child)> onChild;
    std::function<void(const Genome& evaluated)> onEvaluate;
};

template <typename Genome>
struct GenomeOps {
    std::function<Genome(Rng&)> makeRandom;
    std::function<std::pair<Genome, Genome>(const Genome&, const Genome&, Rng&)> crossover;
    // Parent-derived child against an ancestor; the ancestor is never touched.
    std::function<Genome(const Genome&, const Genome&, Rng&)> crossoverWithAncestor;
    std::function<void(Genome&, Rng&)> mutate; // one point mutation
    std::function<double(const Genome&)> fitness;
};

// Steady-state tournament engine. Each mating event draws tournamentSize
// distinct members, breeds the two fittest and overwrites the two least fit
// with the children. One generation is populationSize/2 mating events.
// Deterministic for a fixed seed.
template <typename Genome>
EvolveResultT<Genome> runSteadyState(const EvolutionConfig& config, const GenomeOps<Genome>& ops,
                                     std::span<const Genome> ancestors = {},
                                     const EngineHooks<Genome>& hooks = {}) {
    config.validate();
    const double spRate = config.effectiveSingleParentRate(!ancestors.empty());

    Rng rng(config.rngSeed);
    const int pop = config.populationSize;

    std::vector<Genome> members;
    std::vector<double> fit;
    members.reserve(pop);
    fit.reserve(pop);
    for (int i = 0; i < pop; ++i) {
        members.push_back(ops.makeRandom(rng));
        if (hooks.onEvaluate) hooks.onEvaluate(members.back());
        fit.push_back(ops.fitness(members.back()));
    }

    EvolveResultT<Genome> result;
    std::size_t bestIdx = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
        if (fit[i] > fit[bestIdx]) bestIdx = i;
    result.best = members[bestIdx];
    result.bestFitness = fit[bestIdx];

    std::vector<int> indices(pop);
    std::iota(indices.begin(), indices.end(), 0);
    std::vector<int> picked(config.tournamentSize);

    const int eventsPerGeneration = std::max(1, pop / 2);
    for (int gen = 1; gen <= config.generations; ++gen) {
        for (int event = 0; event < eventsPerGeneration; ++event) {
            // Partial Fisher-Yates: tournamentSize distinct indices.
            for (int k = 0; k < config.tournamentSize; ++k) {
                const int j = k + static_cast<int>(rng.below(pop - k));
                std::swap(indices[k], indices[j]);
                picked[k] = indices[k];
            }
            // Fittest first; ties keep the lower population index.
            std::sort(picked.begin(), picked.end(), [&](int a, int b) {
                if (fit[a] != fit[b]) return fit[a] > fit[b];
                return a < b;
            });
            const int parentA = picked[0];
            const int parentB = picked[1];
            const int victimA = picked[config.tournamentSize - 2];
            const int victimB = picked[config.tournamentSize - 1];

            Genome childA, childB;
            if (spRate > 0.0 && rng.chance(spRate)) {
                const Genome& ancA = ancestors[rng.below(ancestors.size())];
                const Genome& ancB = ancestors[rng.below(ancestors.size())];
                childA = ops.crossoverWithAncestor(members[parentA], ancA, rng);
                childB = ops.crossoverWithAncestor(members[parentB], ancB, rng);
                if (hooks.onChild) {
                    hooks.onChild(members[parentA], ancA, childA);
                    hooks.onChild(members[parentB], ancB, childB);
                }
            } else {
                auto pair = ops.crossover(members[parentA], members[parentB], rng);
                childA = std::move(pair.first);
                childB = std::move(pair.second);
                if (hooks.onChild) {
                    hooks.onChild(members[parentA], members[parentB], childA);
                    hooks.onChild(members[parentB], members[parentA], childB);
                }
            }
            for (int m = 0; m < config.mutationCount; ++m) {
                ops.mutate(childA, rng);
                ops.mutate(childB, rng);
            }

            if (hooks.onEvaluate) {
                hooks.onEvaluate(childA);
                hooks.onEvaluate(childB);
            }
            const double fa = ops.fitness(childA);
            const double fb = ops.fitness(childB);
            members[victimA] = std::move(childA);
            fit[victimA] = fa;
            members[victimB] = std::move(childB);
            fit[victimB] = fb;

            if (fa > result.bestFitness) {
                result.bestFitness = fa;
                result.best = members[victimA];
            }
            if (fb > result.bestFitness) {
                result.bestFitness = fb;
                result.best = members[victimB];
            }
        }

        GenerationStats stats;
        stats.generation = gen;
        stats.best = *std::max_element(fit.begin(), fit.end());
        stats.mean = std::accumulate(fit.begin(), fit.end(), 0.0) / pop;
        result.trace.push_back(stats);
    }
    return result;
}

using FitnessFn = std::function<double(const Gene&)>;
using BreedObserver = std::function<void(const Gene& parent, const Gene& other, const Gene& child)>;

// Integer-gene front end over runSteadyState. Random cut points, uniform
// replacement values for mutation. A custom initializer replaces the domain's
// uniform sampling for the starting population only.
EvolveResult evolve(const EvolutionConfig& config, const GeneDomain& domain,
                    const FitnessFn& fitness, std::span<const Gene> ancestors = {},
                    const BreedObserver& observer = {},
                    const std::function<void(const Gene&)>& onEvaluate = {},
                    const std::function<Gene(Rng&)>& initializer = {});

// Path from a to b changing one differing non-locked position at a time in a
// seed-determined random order: points[0] == a, points.back() == b.
struct Transect {
    std::vector<Gene> points;
    std::vector<std::size_t> order;
};

Transect randomTransect(const Gene& a, const Gene& b, std::uint64_t seed);

struct EnrichmentReport {
    double transectMean = 0.0;
    double randomMean = 0.0;
    double ratio = 0.0; // +inf encoded as infinity when randomMean == 0
    long long transectSamples = 0;
    long long randomSamples = 0;
};

// Mean apoptotic fitness over the interior points of random transects between
// two rules, against uniformly random rules as the baseline.
EnrichmentReport transectEnrichment(const ApoptoticRule& ruleA, const ApoptoticRule& ruleB,
                                    int nTransects, int nRandom, Arena arena, std::uint64_t seed);

std::string formatTrace(std::span<const GenerationStats> trace);

} // namespace richspaces
