#include "richspaces/Evolve.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace richspaces {

Gene GeneDomain::random(Rng& rng) const {
    Gene g;
    g.values.resize(length);
    g.locked = lockedPositions;
    for (std::size_t i = 0; i < length; ++i)
        g.values[i] = minValue + static_cast<int>(rng.below(maxValue - minValue + 1));
    for (std::size_t k = 0; k < lockedPositions.size(); ++k)
        g.values[lockedPositions[k]] = lockedValues[k];
    return g;
}

bool GeneDomain::isLocked(std::size_t pos) const {
    return std::binary_search(lockedPositions.begin(), lockedPositions.end(), pos);
}

GeneDomain apoptoticDomain() {
    GeneDomain d;
    d.length = kRuleEntries;
    d.minValue = 0;
    d.maxValue = kCaStates - 1;
    d.lockedPositions = {0};
    d.lockedValues = {0};
    return d;
}

Gene ruleToGene(const ApoptoticRule& rule) {
    Gene g;
    g.values.assign(rule.entries.begin(), rule.entries.end());
    g.locked = {0};
    return g;
}

ApoptoticRule geneToRule(const Gene& gene) {
    if (gene.values.size() != kRuleEntries) throw std::invalid_argument("gene is not a rule");
    ApoptoticRule rule;
    for (int i = 0; i < kRuleEntries; ++i) {
        const int v = gene.values[i];
        if (v < 0 || v >= kCaStates) throw std::invalid_argument("gene value out of rule range");
        rule.entries[i] = static_cast<std::uint8_t>(v);
    }
    rule.validate();
    return rule;
}

namespace {

void checkCompatible(const Gene& a, const Gene& b, std::size_t cut1, std::size_t cut2) {
    if (a.values.size() != b.values.size()) throw std::invalid_argument("length mismatch");
    if (a.locked != b.locked) throw std::invalid_argument("locked set mismatch");
    if (cut1 > cut2 || cut2 > a.values.size()) throw std::invalid_argument("bad cut points");
}

} // namespace

std::pair<Gene, Gene> twoPointCrossover(const Gene& a, const Gene& b, std::size_t cut1,
                                        std::size_t cut2) {
    checkCompatible(a, b, cut1, cut2);
    Gene childA = a;
    Gene childB = b;
    for (std::size_t i = cut1; i < cut2; ++i) {
        childA.values[i] = b.values[i];
        childB.values[i] = a.values[i];
    }
    for (std::size_t p : a.locked) {
        childA.values[p] = a.values[p];
        childB.values[p] = b.values[p];
    }
    return {std::move(childA), std::move(childB)};
}

Gene singleParentCrossover(const Gene& parent, const Gene& ancestor, std::size_t cut1,
                           std::size_t cut2) {
    checkCompatible(parent, ancestor, cut1, cut2);
    Gene child = parent;
    for (std::size_t i = cut1; i < cut2; ++i) child.values[i] = ancestor.values[i];
    for (std::size_t p : parent.locked) child.values[p] = parent.values[p];
    return child;
}

Gene pointMutate(const Gene& g, std::size_t position, int newValue) {
    if (position >= g.values.size()) throw std::invalid_argument("mutation position out of range");
    if (std::binary_search(g.locked.begin(), g.locked.end(), position))
        throw std::invalid_argument("cannot mutate a locked position");
    Gene out = g;
    out.values[position] = newValue;
    return out;
}

void EvolutionConfig::validate() const {
    if (populationSize < 1) throw std::invalid_argument("population size must be positive");
    if (generations < 1) throw std::invalid_argument("generations must be positive");
    if (tournamentSize < 2) throw std::invalid_argument("tournament size must be at least 2");
    if (tournamentSize > populationSize)
        throw std::invalid_argument("tournament size exceeds population");
    if (mutationCount < 0) throw std::invalid_argument("mutation count must be nonnegative");
    if (singleParentRate && (*singleParentRate < 0.0 || *singleParentRate > 1.0))
        throw std::invalid_argument("single parent rate must be in [0, 1]");
}

double EvolutionConfig::effectiveSingleParentRate(bool haveAncestors) const {
    if (!haveAncestors) {
        if (singleParentRate && *singleParentRate > 0.0)
            throw std::invalid_argument("single parent rate > 0 requires ancestors");
        return 0.0;
    }
    return singleParentRate.value_or(0.5);
}

namespace {

// Uniform cut pair with 0 <= cut1 <= cut2 <= length.
std::pair<std::size_t, std::size_t> randomCuts(std::size_t length, Rng& rng) {
    std::size_t c1 = rng.below(length + 1);
    std::size_t c2 = rng.below(length + 1);
    if (c1 > c2) std::swap(c1, c2);
    return {c1, c2};
}

} // namespace

EvolveResult evolve(const EvolutionConfig& config, const GeneDomain& domain,
                    const FitnessFn& fitness, std::span<const Gene> ancestors,
                    const BreedObserver& observer,
                    const std::function<void(const Gene&)>& onEvaluate,
                    const std::function<Gene(Rng&)>& initializer) {
    const std::size_t freeCount = domain.length - domain.lockedPositions.size();
    if (freeCount == 0 && config.mutationCount > 0)
        throw std::invalid_argument("all positions locked");

    GenomeOps<Gene> ops;
    if (initializer)
        ops.makeRandom = initializer;
    else
        ops.makeRandom = [&domain](Rng& rng) { return domain.random(rng); };
    ops.crossover = [](const Gene& a, const Gene& b, Rng& rng) {
        const auto [c1, c2] = randomCuts(a.values.size(), rng);
        return twoPointCrossover(a, b, c1, c2);
    };
    ops.crossoverWithAncestor = [](const Gene& parent, const Gene& ancestor, Rng& rng) {
        const auto [c1, c2] = randomCuts(parent.values.size(), rng);
        return singleParentCrossover(parent, ancestor, c1, c2);
    };
    ops.mutate = [&domain](Gene& g, Rng& rng) {
        // Pick a uniformly random non-locked position.
        std::size_t pos;
        do {
            pos = rng.below(g.values.size());
        } while (domain.isLocked(pos));
        g.values[pos] = domain.minValue +
                        static_cast<int>(rng.below(domain.maxValue - domain.minValue + 1));
    };
    ops.fitness = fitness;

    EngineHooks<Gene> hooks;
    if (observer) hooks.onChild = observer;
    if (onEvaluate) hooks.onEvaluate = onEvaluate;
    return runSteadyState<Gene>(config, ops, ancestors, hooks);
}

Transect randomTransect(const Gene& a, const Gene& b, std::uint64_t seed) {
    if (a.values.size() != b.values.size()) throw std::invalid_argument("length mismatch");
    if (a.locked != b.locked) throw std::invalid_argument("locked set mismatch");

    std::vector<std::size_t> differing;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] != b.values[i] &&
            !std::binary_search(a.locked.begin(), a.locked.end(), i))
            differing.push_back(i);
    }

    Rng rng(seed);
    for (std::size_t i = differing.size(); i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(differing[i - 1], differing[j]);
    }

    Transect t;
    t.order = differing;
    t.points.reserve(differing.size() + 1);
    t.points.push_back(a);
    Gene current = a;
    for (std::size_t pos : differing) {
        current.values[pos] = b.values[pos];
        t.points.push_back(current);
    }
    return t;
}

EnrichmentReport transectEnrichment(const ApoptoticRule& ruleA, const ApoptoticRule& ruleB,
                                    int nTransects, int nRandom, Arena arena, std::uint64_t seed) {
    if (nTransects < 1 || nRandom < 1)
        throw std::invalid_argument("sample counts must be positive");

    const Gene geneA = ruleToGene(ruleA);
    const Gene geneB = ruleToGene(ruleB);

    EnrichmentReport report;
    double transectTotal = 0.0;
    for (int t = 0; t < nTransects; ++t) {
        const Transect transect = randomTransect(geneA, geneB, deriveSeed(seed, "transect") + t);
        const std::size_t n = transect.points.size();
        // Interior points only; degenerate transects fall back to all points.
        std::size_t lo = 0, hi = n;
        if (n >= 3) {
            lo = 1;
            hi = n - 1;
        }
        for (std::size_t i = lo; i < hi; ++i) {
            transectTotal += static_cast<double>(evaluateFitness(geneToRule(transect.points[i]), arena));
            ++report.transectSamples;
        }
    }
    report.transectMean = transectTotal / static_cast<double>(report.transectSamples);

    Rng rng(deriveSeed(seed, "random-baseline"));
    double randomTotal = 0.0;
    for (int i = 0; i < nRandom; ++i) {
        randomTotal += static_cast<double>(evaluateFitness(randomRule(rng), arena));
        ++report.randomSamples;
    }
    report.randomMean = randomTotal / static_cast<double>(report.randomSamples);

    report.ratio = report.randomMean > 0.0
                       ? report.transectMean / report.randomMean
                       : (report.transectMean > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    return report;
}

std::string formatTrace(std::span<const GenerationStats> trace) {
    std::ostringstream out;
    out << "generation,best,mean\n";
    for (const GenerationStats& s : trace)
        out << s.generation << ',' << s.best << ',' << s.mean << '\n';
    return out.str();
}

} // namespace richspaces
