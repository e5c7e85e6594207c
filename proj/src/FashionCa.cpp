#include "richspaces/FashionCa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace richspaces {

void CompetitionMatrix::validate() const {
    if (nStates < 2) throw std::invalid_argument("competition matrix needs at least 2 states");
    if (scores.size() != static_cast<std::size_t>(nStates) * nStates)
        throw std::invalid_argument("competition matrix shape mismatch");
    for (double v : scores)
        if (!std::isfinite(v)) throw std::invalid_argument("competition matrix entry not finite");
}

CompetitionMatrix randomMatrix(int nStates, Rng& rng) {
    CompetitionMatrix m;
    m.nStates = nStates;
    m.scores.resize(static_cast<std::size_t>(nStates) * nStates);
    for (double& v : m.scores) v = rng.gaussian(0.0, 1.0);
    m.validate();
    return m;
}

CompetitionMatrix parseMatrix(const std::string& text) {
    std::istringstream in(text);
    CompetitionMatrix m;
    if (!(in >> m.nStates)) throw std::runtime_error("matrix needs a state count");
    if (m.nStates < 2) throw std::runtime_error("matrix state count must be at least 2");
    m.scores.resize(static_cast<std::size_t>(m.nStates) * m.nStates);
    for (double& v : m.scores)
        if (!(in >> v)) throw std::runtime_error("truncated matrix entries");
    double extra;
    if (in >> extra) throw std::runtime_error("matrix has trailing values");
    m.validate();
    return m;
}

std::string formatMatrix(const CompetitionMatrix& m) {
    std::ostringstream out;
    out.precision(17);
    out << m.nStates << '\n';
    for (int a = 0; a < m.nStates; ++a) {
        for (int b = 0; b < m.nStates; ++b) {
            if (b) out << ' ';
            out << m.at(a, b);
        }
        out << '\n';
    }
    return out.str();
}

StateGrid randomStateGrid(int width, int height, int nStates, std::uint64_t seed) {
    if (width < 1 || height < 1) throw std::invalid_argument("grid dimensions must be positive");
    StateGrid g;
    g.width = width;
    g.height = height;
    g.states.resize(static_cast<std::size_t>(width) * height);
    Rng rng(seed);
    for (std::uint8_t& s : g.states) s = static_cast<std::uint8_t>(rng.below(nStates));
    return g;
}

namespace {

void checkGrid(const StateGrid& grid, int nStates) {
    for (std::uint8_t s : grid.states)
        if (s >= nStates) throw std::invalid_argument("grid state out of matrix range");
}

// Scores every cell against its Moore neighborhood, then lets each cell adopt
// the state of the best-scoring cell among itself and its 8 neighbors.
// ruleAt(x) supplies the matrix used by column x.
template <typename RuleAt>
StateGrid fashionStep(const StateGrid& grid, RuleAt ruleAt) {
    const int w = grid.width;
    const int h = grid.height;

    std::vector<double> score(static_cast<std::size_t>(w) * h, 0.0);
    for (int y = 0; y < h; ++y) {
        const int yUp = (y + h - 1) % h;
        const int yDown = (y + 1) % h;
        for (int x = 0; x < w; ++x) {
            const int xLeft = (x + w - 1) % w;
            const int xRight = (x + 1) % w;
            const CompetitionMatrix& m = ruleAt(x);
            const int mine = grid.at(x, y);
            double s = 0.0;
            s += m.at(mine, grid.at(xLeft, yUp));
            s += m.at(mine, grid.at(x, yUp));
            s += m.at(mine, grid.at(xRight, yUp));
            s += m.at(mine, grid.at(xLeft, y));
            s += m.at(mine, grid.at(xRight, y));
            s += m.at(mine, grid.at(xLeft, yDown));
            s += m.at(mine, grid.at(x, yDown));
            s += m.at(mine, grid.at(xRight, yDown));
            score[static_cast<std::size_t>(y) * w + x] = s;
        }
    }

    StateGrid next;
    next.width = w;
    next.height = h;
    next.states.resize(grid.states.size());
    for (int y = 0; y < h; ++y) {
        const int yUp = (y + h - 1) % h;
        const int yDown = (y + 1) % h;
        for (int x = 0; x < w; ++x) {
            const int xLeft = (x + w - 1) % w;
            const int xRight = (x + 1) % w;
            const int xs[9] = {x, xLeft, x, xRight, xLeft, xRight, xLeft, x, xRight};
            const int ys[9] = {y, yUp, yUp, yUp, y, y, yDown, yDown, yDown};
            double bestScore = -std::numeric_limits<double>::infinity();
            std::size_t bestIdx = 0;
            for (int k = 0; k < 9; ++k) {
                const std::size_t idx = static_cast<std::size_t>(ys[k]) * w + xs[k];
                const double s = score[idx];
                if (s > bestScore || (s == bestScore && idx < bestIdx)) {
                    bestScore = s;
                    bestIdx = idx;
                }
            }
            next.states[static_cast<std::size_t>(y) * w + x] = grid.states[bestIdx];
        }
    }
    return next;
}

} // namespace

StateGrid update(const StateGrid& grid, const CompetitionMatrix& m) {
    m.validate();
    checkGrid(grid, m.nStates);
    return fashionStep(grid, [&m](int) -> const CompetitionMatrix& { return m; });
}

StateGrid updatePerColumn(const StateGrid& grid, std::span<const CompetitionMatrix> columnRules) {
    if (columnRules.size() != static_cast<std::size_t>(grid.width))
        throw std::invalid_argument("need one rule per column");
    for (const CompetitionMatrix& m : columnRules) {
        m.validate();
        if (m.nStates != columnRules.front().nStates)
            throw std::invalid_argument("column rules disagree on state count");
    }
    checkGrid(grid, columnRules.front().nStates);
    return fashionStep(grid, [columnRules](int x) -> const CompetitionMatrix& {
        return columnRules[static_cast<std::size_t>(x)];
    });
}

CompetitionMatrix weightedAverage(const CompetitionMatrix& a, const CompetitionMatrix& b,
                                  double t) {
    a.validate();
    b.validate();
    if (a.nStates != b.nStates) throw std::invalid_argument("matrix size mismatch");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("weight must be in [0, 1]");
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    CompetitionMatrix out;
    out.nStates = a.nStates;
    out.scores.resize(a.scores.size());
    for (std::size_t i = 0; i < a.scores.size(); ++i)
        out.scores[i] = (1.0 - t) * a.scores[i] + t * b.scores[i];
    return out;
}

CavernMap generateMap(const CompetitionMatrix& m, int width, int height, int steps,
                      std::uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    m.validate();
    StateGrid grid = randomStateGrid(width, height, m.nStates, seed);
    for (int i = 0; i < steps; ++i) grid = update(grid, m);
    CavernMap map;
    map.width = width;
    map.height = height;
    map.passable.resize(grid.states.size());
    for (std::size_t i = 0; i < grid.states.size(); ++i)
        map.passable[i] = grid.states[i] == 0 ? 1 : 0;
    return map;
}

double mapFitness(const CavernMap& map, FloorBounds bounds) {
    const std::size_t total = map.passable.size();
    std::size_t floorCells = 0;
    for (std::uint8_t p : map.passable) floorCells += p;
    const double fraction = static_cast<double>(floorCells) / static_cast<double>(total);
    if (fraction < bounds.lo || fraction > bounds.hi) return 0.0;

    // Largest 4-connected floor component.
    std::vector<std::uint8_t> seen(total, 0);
    std::vector<std::size_t> stack;
    std::size_t largest = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (!map.passable[i] || seen[i]) continue;
        std::size_t size = 0;
        stack.assign(1, i);
        seen[i] = 1;
        while (!stack.empty()) {
            const std::size_t j = stack.back();
            stack.pop_back();
            ++size;
            const int x = static_cast<int>(j % map.width);
            const int y = static_cast<int>(j / map.width);
            const int nx[4] = {x - 1, x + 1, x, x};
            const int ny[4] = {y, y, y - 1, y + 1};
            for (int d = 0; d < 4; ++d) {
                if (nx[d] < 0 || nx[d] >= map.width || ny[d] < 0 || ny[d] >= map.height) continue;
                const std::size_t k = static_cast<std::size_t>(ny[d]) * map.width + nx[d];
                if (map.passable[k] && !seen[k]) {
                    seen[k] = 1;
                    stack.push_back(k);
                }
            }
        }
        largest = std::max(largest, size);
    }
    return static_cast<double>(largest);
}

CompetitionMatrix morphColumnMatrix(const CompetitionMatrix& a, const CompetitionMatrix& b,
                                    int width, int column) {
    if (width < 1 || column < 0 || column >= width) throw std::invalid_argument("bad morph column");
    const double t = width == 1 ? 0.0 : static_cast<double>(column) / (width - 1);
    return weightedAverage(a, b, t);
}

StateGrid runMorph(const CompetitionMatrix& a, const CompetitionMatrix& b, int width, int height,
                   int steps, std::uint64_t seed) {
    if (a.nStates != b.nStates) throw std::invalid_argument("matrix size mismatch");
    std::vector<CompetitionMatrix> rules;
    rules.reserve(width);
    for (int x = 0; x < width; ++x) rules.push_back(morphColumnMatrix(a, b, width, x));
    StateGrid grid = randomStateGrid(width, height, a.nStates, seed);
    for (int i = 0; i < steps; ++i) grid = updatePerColumn(grid, rules);
    return grid;
}

double pairSegmentFitness(const CompetitionMatrix& a, const CompetitionMatrix& b,
                          const CoevolveParams& params) {
    double worst = std::numeric_limits<double>::infinity();
    for (double t : params.tSamples) {
        const CompetitionMatrix m = weightedAverage(a, b, t);
        const CavernMap map = generateMap(m, params.mapWidth, params.mapHeight, params.steps,
                                          params.mapSeed);
        worst = std::min(worst, mapFitness(map, params.bounds));
        if (worst == 0.0) break; // min can only stay zero
    }
    return worst;
}

namespace {

using RealGenome = std::vector<double>;

} // namespace

CoevolveResult coevolvePair(const EvolutionConfig& config, const CoevolveParams& params) {
    if (params.tSamples.empty()) throw std::invalid_argument("need at least one t sample");
    for (double t : params.tSamples)
        if (t < 0.0 || t > 1.0) throw std::invalid_argument("t sample outside [0, 1]");
    if (params.nStates < 2) throw std::invalid_argument("need at least 2 states");

    const std::size_t half = static_cast<std::size_t>(params.nStates) * params.nStates;

    auto toPair = [&](const RealGenome& g) {
        CompetitionMatrix a, b;
        a.nStates = b.nStates = params.nStates;
        a.scores.assign(g.begin(), g.begin() + half);
        b.scores.assign(g.begin() + half, g.end());
        return std::make_pair(a, b);
    };

    GenomeOps<RealGenome> ops;
    ops.makeRandom = [&](Rng& rng) {
        // Start every pair degenerate (B = A): the segment min then equals the
        // single-matrix fitness, which is nonzero often enough to give
        // selection a foothold; evolution separates the halves from there.
        RealGenome g(2 * half);
        for (std::size_t i = 0; i < half; ++i) {
            g[i] = rng.gaussian(0.0, 1.0);
            g[half + i] = g[i];
        }
        return g;
    };
    ops.crossover = [](const RealGenome& x, const RealGenome& y, Rng& rng) {
        std::size_t c1 = rng.below(x.size() + 1);
        std::size_t c2 = rng.below(x.size() + 1);
        if (c1 > c2) std::swap(c1, c2);
        RealGenome cx = x, cy = y;
        for (std::size_t i = c1; i < c2; ++i) {
            cx[i] = y[i];
            cy[i] = x[i];
        }
        return std::make_pair(std::move(cx), std::move(cy));
    };
    ops.crossoverWithAncestor = [](const RealGenome& parent, const RealGenome& ancestor, Rng& rng) {
        std::size_t c1 = rng.below(parent.size() + 1);
        std::size_t c2 = rng.below(parent.size() + 1);
        if (c1 > c2) std::swap(c1, c2);
        RealGenome child = parent;
        for (std::size_t i = c1; i < c2; ++i) child[i] = ancestor[i];
        return child;
    };
    ops.mutate = [&params](RealGenome& g, Rng& rng) {
        g[rng.below(g.size())] += rng.gaussian(0.0, params.mutationSigma);
    };
    ops.fitness = [&](const RealGenome& g) {
        const auto [a, b] = toPair(g);
        return pairSegmentFitness(a, b, params);
    };

    const EvolveResultT<RealGenome> run = runSteadyState<RealGenome>(config, ops);

    CoevolveResult result;
    auto [a, b] = toPair(run.best);
    result.a = std::move(a);
    result.b = std::move(b);
    result.minFitness = run.bestFitness;
    result.trace = run.trace;
    return result;
}

namespace {

Rgb stateColor(int state) {
    static const Rgb palette[8] = {Rgb{245, 245, 245}, Rgb{40, 40, 40},   Rgb{204, 41, 41},
                                   Rgb{41, 112, 204},  Rgb{38, 166, 74},  Rgb{235, 177, 30},
                                   Rgb{150, 46, 188},  Rgb{22, 184, 184}};
    if (state < 8) return palette[state];
    const std::uint32_t h = static_cast<std::uint32_t>(state) * 2654435761u;
    return Rgb{std::uint8_t(64 + (h & 0x7f)), std::uint8_t(64 + ((h >> 8) & 0x7f)),
               std::uint8_t(64 + ((h >> 16) & 0x7f))};
}

} // namespace

Image renderStateGrid(const StateGrid& grid) {
    Image img(grid.width, grid.height);
    for (int y = 0; y < grid.height; ++y)
        for (int x = 0; x < grid.width; ++x) img.at(x, y) = stateColor(grid.at(x, y));
    return img;
}

Image renderCavern(const CavernMap& map) {
    const Rgb floorColor{235, 230, 215};
    const Rgb rockColor{70, 60, 55};
    Image img(map.width, map.height);
    for (int y = 0; y < map.height; ++y)
        for (int x = 0; x < map.width; ++x) img.at(x, y) = map.at(x, y) ? floorColor : rockColor;
    return img;
}

} // namespace richspaces
