// richspaces
//
// Command-line front end for the search-space-enrichment toolkit: weighted
// Voronoi path networks, apoptotic 1-D cellular automata with evolutionary
// search and transect reports, single-parent enlargement runs, do-what's-
// possible room layouts, fashion-based cavern CAs with convex rule morphs,
// and polyomino math puzzles with neutral-network operators.
//
// Every subcommand is deterministic for a fixed --seed (or RICHSPACES_SEED).

#include "richspaces/Ca1d.hpp"
#include "richspaces/Dwp.hpp"
#include "richspaces/Evolve.hpp"
#include "richspaces/FashionCa.hpp"
#include "richspaces/Formats.hpp"
#include "richspaces/Geometry.hpp"
#include "richspaces/Image.hpp"
#include "richspaces/Polyomino.hpp"
#include "richspaces/Random.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace richspaces;

constexpr std::uint64_t kDefaultSeed = 1905;

std::uint64_t envOrDefaultSeed() {
    if (const char* env = std::getenv("RICHSPACES_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::runtime_error("RICHSPACES_SEED is not an integer");
        }
    }
    return kDefaultSeed;
}

struct Size {
    int w = 0, h = 0;
};

Size parseSize(const std::string& s) {
    const std::size_t x = s.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("size", "expected WxH, e.g. 201x201");
    Size out;
    try {
        out.w = std::stoi(s.substr(0, x));
        out.h = std::stoi(s.substr(x + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("size", "expected WxH, e.g. 201x201");
    }
    if (out.w < 1 || out.h < 1) throw CLI::ValidationError("size", "dimensions must be positive");
    return out;
}

// Rule/matrix/SDA arguments accept either a file path or the inline text.
std::string fileOrInline(const std::string& arg) {
    if (std::filesystem::exists(arg)) return readTextFile(arg);
    return arg;
}

std::string formatDouble(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

// ---------------------------------------------------------------------------
// voronoi
// ---------------------------------------------------------------------------

struct VoronoiArgs {
    int grid = 0;
    int random = 0;
    int extra = 0;
    std::string size = "201x201";
    double jitter = 0.1;
    std::string out = "voronoi";
};

CenterSpec centerSpecFrom(const VoronoiArgs& args) {
    CenterSpec spec;
    spec.jitter = args.jitter;
    if (args.grid > 0 && args.extra > 0) {
        spec.mode = CenterMode::GridPlusRandom;
        spec.count = args.grid;
        spec.extra = args.extra;
    } else if (args.grid > 0) {
        spec.mode = CenterMode::Grid;
        spec.count = args.grid;
    } else if (args.random > 0) {
        spec.mode = CenterMode::Random;
        spec.count = args.random;
    } else {
        throw CLI::ValidationError("voronoi", "need --grid K or --random N");
    }
    return spec;
}

int runVoronoi(const VoronoiArgs& args, std::uint64_t seed) {
    const Size size = parseSize(args.size);
    const CenterSpec spec = centerSpecFrom(args);
    const auto centers = generateCenters(spec, size.w, size.h, deriveSeed(seed, "voronoi.centers"));
    const TileGrid grid = rasterize(centers, size.w, size.h);
    const PathNetwork net = extractPathNetwork(grid);

    writePpm(renderTiles(grid, &net), args.out + ".ppm");
    writeNetworkFile(net, args.out + ".network.txt");
    std::cout << "centers " << centers.size() << "\n"
              << "connected " << (isFourConnected(net) ? 1 : 0) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// apoptotic
// ---------------------------------------------------------------------------

struct ApoptoticRenderArgs {
    std::string rule;
    std::string arena = "201x201";
    int seedState = 1;
    std::string out = "apoptotic.ppm";
};

int runApoptoticRender(const ApoptoticRenderArgs& args) {
    const ApoptoticRule rule = parseRule(fileOrInline(args.rule));
    const Size size = parseSize(args.arena);
    const TimeHistory history = simulate(rule, Arena{size.w, size.h}, args.seedState);
    writePpm(renderHistory(history), args.out);
    std::cout << "died_at " << (history.diedAt ? *history.diedAt : -1) << "\n";
    return 0;
}

// Uniform rules almost never die inside the arena, so fresh populations are
// seeded with zero-heavy rules to give selection something to climb.
std::function<Gene(Rng&)> sparseRuleInitializer(double zeroProb) {
    return [zeroProb](Rng& rng) { return ruleToGene(sparseRandomRule(rng, zeroProb)); };
}

struct ApoptoticEvolveArgs {
    std::string arena = "201x201";
    int pop = 100;
    int gens = 100;
    int tournament = 7;
    int mutations = 1;
    int seedState = 1;
    double initZeroProb = 0.5;
    std::string out = "evolved";
};

int runApoptoticEvolve(const ApoptoticEvolveArgs& args, std::uint64_t seed) {
    const Size size = parseSize(args.arena);
    const Arena arena{size.w, size.h};

    EvolutionConfig config;
    config.populationSize = args.pop;
    config.generations = args.gens;
    config.tournamentSize = args.tournament;
    config.mutationCount = args.mutations;
    config.rngSeed = deriveSeed(seed, "apoptotic.evolve");

    const auto fitness = [&](const Gene& g) {
        return static_cast<double>(evaluateFitness(geneToRule(g), arena, args.seedState));
    };
    const EvolveResult result = evolve(config, apoptoticDomain(), fitness, {}, {}, {},
                                       sparseRuleInitializer(args.initZeroProb));

    const ApoptoticRule best = geneToRule(result.best);
    writeTextFile(formatRule(best), args.out + ".rule.txt");
    writeTextFile(formatTrace(result.trace), args.out + ".trace.csv");
    writePpm(renderHistory(simulate(best, arena, args.seedState)), args.out + ".ppm");
    std::cout << "best_fitness " << result.bestFitness << "\n";
    return 0;
}

struct ApoptoticTransectArgs {
    std::string ruleA;
    std::string ruleB;
    int transects = 20;
    int random = 1000;
    std::string arena = "201x201";
    std::string out = "transect.report.txt";
};

int runApoptoticTransect(const ApoptoticTransectArgs& args, std::uint64_t seed) {
    const ApoptoticRule a = parseRule(fileOrInline(args.ruleA));
    const ApoptoticRule b = parseRule(fileOrInline(args.ruleB));
    const Size size = parseSize(args.arena);
    const EnrichmentReport report = transectEnrichment(a, b, args.transects, args.random,
                                                       Arena{size.w, size.h},
                                                       deriveSeed(seed, "apoptotic.transect"));
    writeReportFile(
        {
            {"transect_mean", formatDouble(report.transectMean)},
            {"random_mean", formatDouble(report.randomMean)},
            {"ratio", formatDouble(report.ratio)},
            {"transect_samples", std::to_string(report.transectSamples)},
            {"random_samples", std::to_string(report.randomSamples)},
        },
        args.out);
    std::cout << "transect_mean " << report.transectMean << "\n"
              << "random_mean " << report.randomMean << "\n"
              << "ratio " << report.ratio << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// sp: single-parent enlargement
// ---------------------------------------------------------------------------

struct SpArgs {
    std::string ancestor;
    std::string arena = "401x401";
    int pop = 100;
    int gens = 40;
    double rate = 0.5;
    int mutations = 1;
    int seedState = 1;
    std::string out = "sp";
};

int runSp(const SpArgs& args, std::uint64_t seed) {
    const ApoptoticRule ancestorRule = parseRule(readTextFile(args.ancestor));
    const Size size = parseSize(args.arena);
    const Arena arena{size.w, size.h};

    EvolutionConfig config;
    config.populationSize = args.pop;
    config.generations = args.gens;
    config.mutationCount = args.mutations;
    config.singleParentRate = args.rate;
    config.rngSeed = deriveSeed(seed, "sp.evolve");

    const std::vector<Gene> ancestors{ruleToGene(ancestorRule)};
    const auto fitness = [&](const Gene& g) {
        return static_cast<double>(evaluateFitness(geneToRule(g), arena, args.seedState));
    };
    const EvolveResult result =
        evolve(config, apoptoticDomain(), fitness, ancestors, {}, {}, sparseRuleInitializer(0.5));

    const ApoptoticRule best = geneToRule(result.best);
    writeTextFile(formatRule(best), args.out + ".rule.txt");
    writeTextFile(formatTrace(result.trace), args.out + ".trace.csv");
    writePpm(renderHistory(simulate(best, arena, args.seedState)), args.out + ".ppm");
    std::cout << "best_fitness " << result.bestFitness << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// dwp
// ---------------------------------------------------------------------------

struct DwpArgs {
    std::string sda;
    int sdaStates = 6;
    int sdaEmit = 3;
    VoronoiArgs voronoi;
    int budget = 500;
    std::string out = "dwp";
};

int runDwp(const DwpArgs& args, std::uint64_t seed) {
    SelfDrivingAutomaton sda;
    if (!args.sda.empty()) {
        std::istringstream in(fileOrInline(args.sda));
        sda = parseSda(in);
    } else {
        Rng rng(deriveSeed(seed, "dwp.sda"));
        sda = randomSda(args.sdaStates, args.sdaEmit, rng);
    }

    const Size size = parseSize(args.voronoi.size);
    const CenterSpec spec = centerSpecFrom(args.voronoi);
    const auto centers = generateCenters(spec, size.w, size.h, deriveSeed(seed, "dwp.centers"));
    const PathNetwork net = extractPathNetwork(rasterize(centers, size.w, size.h));

    const RoomLayout layout = layoutRooms(sda, net, args.budget);
    writePpm(renderLayout(layout), args.out + ".ppm");
    writeLayoutFile(layout, args.out + ".layout.txt");
    std::cout << "rooms " << layout.rooms.size() << "\n"
              << "corridors " << layout.corridors.size() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// fashion
// ---------------------------------------------------------------------------

struct FashionMapArgs {
    std::string matrix;
    int states = 4;
    std::string size = "64x64";
    int steps = 20;
    std::string out = "cavern";
};

int runFashionMap(const FashionMapArgs& args, std::uint64_t seed) {
    CompetitionMatrix m;
    if (!args.matrix.empty()) {
        m = parseMatrix(fileOrInline(args.matrix));
    } else {
        Rng rng(deriveSeed(seed, "fashion.matrix"));
        m = randomMatrix(args.states, rng);
    }
    const Size size = parseSize(args.size);
    const CavernMap map = generateMap(m, size.w, size.h, args.steps, deriveSeed(seed, "fashion.map"));
    writePpm(renderCavern(map), args.out + ".ppm");
    writeCavernFile(map, args.out + ".map.txt");
    std::cout << "fitness " << mapFitness(map) << "\n";
    return 0;
}

struct FashionMorphArgs {
    std::string a;
    std::string b;
    std::string size = "256x64";
    int steps = 20;
    std::string out = "morph.ppm";
};

int runFashionMorph(const FashionMorphArgs& args, std::uint64_t seed) {
    const CompetitionMatrix a = parseMatrix(fileOrInline(args.a));
    const CompetitionMatrix b = parseMatrix(fileOrInline(args.b));
    const Size size = parseSize(args.size);
    const StateGrid grid = runMorph(a, b, size.w, size.h, args.steps,
                                    deriveSeed(seed, "fashion.morph"));
    writePpm(renderStateGrid(grid), args.out);
    return 0;
}

struct FashionCoevolveArgs {
    int states = 4;
    std::string mapSize = "32x32";
    int steps = 20;
    int tSamples = 11;
    int pop = 32;
    int gens = 80;
    double sigma = 0.35;
    std::string out = "coevolved";
};

int runFashionCoevolve(const FashionCoevolveArgs& args, std::uint64_t seed) {
    const Size size = parseSize(args.mapSize);
    if (args.tSamples < 2) throw CLI::ValidationError("--tsamples", "need at least 2 samples");

    CoevolveParams params;
    params.nStates = args.states;
    params.mapWidth = size.w;
    params.mapHeight = size.h;
    params.steps = args.steps;
    params.mapSeed = deriveSeed(seed, "fashion.coevolve.map");
    params.mutationSigma = args.sigma;
    for (int i = 0; i < args.tSamples; ++i)
        params.tSamples.push_back(static_cast<double>(i) / (args.tSamples - 1));

    EvolutionConfig config;
    config.populationSize = args.pop;
    config.generations = args.gens;
    config.rngSeed = deriveSeed(seed, "fashion.coevolve");

    const CoevolveResult result = coevolvePair(config, params);
    writeTextFile(formatMatrix(result.a), args.out + ".a.txt");
    writeTextFile(formatMatrix(result.b), args.out + ".b.txt");
    writeReportFile({{"min_fitness", formatDouble(result.minFitness)}}, args.out + ".report.txt");
    std::cout << "min_fitness " << result.minFitness << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// polyomino
// ---------------------------------------------------------------------------

struct PolyConstructArgs {
    std::string rect = "3x4";
    std::string pieces;
    int pieceSize = 3;
    int maxPieces = 5;
    int valueLo = 1;
    int valueHi = 9;
    std::string out = "puzzle";
};

int runPolyConstruct(const PolyConstructArgs& args, std::uint64_t seed) {
    const Size rect = parseSize(args.rect); // RxC: width field = rows
    const int rows = rect.w;
    const int cols = rect.h;

    std::vector<Polyomino> pieces;
    if (!args.pieces.empty()) {
        const ParsedPuzzle parsed = parsePuzzle(readTextFile(args.pieces));
        pieces = parsed.puzzle.pieces;
    } else {
        pieces = randomPartition(rows, cols, args.pieceSize, args.maxPieces,
                                 deriveSeed(seed, "polyomino.partition"));
    }

    if (args.valueLo < 1 || args.valueHi < args.valueLo)
        throw CLI::ValidationError("--values", "need 1 <= lo <= hi");
    Rng rng(deriveSeed(seed, "polyomino.numbers"));
    std::vector<int> numbers;
    numbers.reserve(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows * cols; ++i) numbers.push_back(rng.range(args.valueLo, args.valueHi));

    const RichPuzzle rich = constructRichPuzzle(rows, cols, std::move(pieces), std::move(numbers),
                                                deriveSeed(seed, "polyomino.tiling"));
    writeTextFile(formatPuzzle(rich.puzzle, &rich.certificate), args.out + ".puzzle.txt");
    std::cout << "score " << rich.certificate.score << "\n"
              << "pieces " << rich.puzzle.pieces.size() << "\n";
    return 0;
}

struct PolySolveArgs {
    std::string puzzle;
    bool symmetries = false;
};

int runPolySolve(const PolySolveArgs& args) {
    const ParsedPuzzle parsed = parsePuzzle(readTextFile(args.puzzle));
    const Solution solution = solve(parsed.puzzle, SolveGuard{}, args.symmetries);
    std::cout << "score " << solution.score << "\n";
    for (const Placement& p : solution.placements)
        std::cout << "place " << p.pieceIndex << " " << p.row << " " << p.col << "\n";
    return 0;
}

struct PolyNeutralArgs {
    std::string puzzle;
    int count = 5;
    std::string out = "neutral";
};

int runPolyNeutral(const PolyNeutralArgs& args, std::uint64_t seed) {
    const ParsedPuzzle parsed = parsePuzzle(readTextFile(args.puzzle));
    if (!parsed.certificate)
        throw std::runtime_error("puzzle file carries no certificate; run construct first");
    if (args.count < 1) throw CLI::ValidationError("--count", "must be positive");

    RichPuzzle rich{parsed.puzzle, *parsed.certificate};
    const std::vector<RichPuzzle> retiled = neutralRetile(rich);

    // Alternate tilings first, then within-piece permutations to fill up.
    std::vector<RichPuzzle> outputs;
    for (const RichPuzzle& r : retiled) {
        if (static_cast<int>(outputs.size()) == args.count) break;
        outputs.push_back(r);
    }
    std::uint64_t salt = 0;
    while (static_cast<int>(outputs.size()) < args.count)
        outputs.push_back(neutralPermute(rich, deriveSeed(seed, "polyomino.permute") + salt++));

    for (std::size_t i = 0; i < outputs.size(); ++i)
        writeTextFile(formatPuzzle(outputs[i].puzzle, &outputs[i].certificate),
                      args.out + "." + std::to_string(i) + ".puzzle.txt");
    std::cout << "count " << outputs.size() << "\n"
              << "score " << rich.certificate.score << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"richspaces: enriched search spaces for game content"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool seedSet = false;
    app.add_option("--seed", seed, "global RNG seed (default: RICHSPACES_SEED or built-in)")
        ->each([&seedSet](const std::string&) { seedSet = true; });

    VoronoiArgs voronoiArgs;
    CLI::App* voronoi = app.add_subcommand("voronoi", "weighted Voronoi street map + path network");
    voronoi->add_option("--grid", voronoiArgs.grid, "K for a regular KxK lattice of centers");
    voronoi->add_option("--random", voronoiArgs.random, "N random centers");
    voronoi->add_option("--extra", voronoiArgs.extra, "M extra random centers on top of the grid");
    voronoi->add_option("--size", voronoiArgs.size, "raster size WxH (default 201x201)");
    voronoi->add_option("--jitter", voronoiArgs.jitter, "weight jitter in [0,1) (default 0.1; 0 = equal weights)");
    voronoi->add_option("--out", voronoiArgs.out, "output prefix");

    CLI::App* apoptotic = app.add_subcommand("apoptotic", "1-D apoptotic cellular automata");
    apoptotic->require_subcommand(1);

    ApoptoticRenderArgs renderArgs;
    CLI::App* aRender = apoptotic->add_subcommand("render", "render a rule's time history");
    aRender->add_option("--rule", renderArgs.rule, "rule file or 36 inline integers")->required();
    aRender->add_option("--arena", renderArgs.arena, "arena WxH (default 201x201)");
    aRender->add_option("--seed-state", renderArgs.seedState, "initial cell state (default 1)");
    aRender->add_option("--out", renderArgs.out, "output image path");

    ApoptoticEvolveArgs evolveArgs;
    CLI::App* aEvolve = apoptotic->add_subcommand("evolve", "evolve a high-fitness rule");
    aEvolve->add_option("--arena", evolveArgs.arena, "arena WxH (default 201x201)");
    aEvolve->add_option("--pop", evolveArgs.pop, "population size");
    aEvolve->add_option("--gens", evolveArgs.gens, "generations");
    aEvolve->add_option("--tournament", evolveArgs.tournament, "tournament size");
    aEvolve->add_option("--mutations", evolveArgs.mutations, "point mutations per child");
    aEvolve->add_option("--seed-state", evolveArgs.seedState, "initial cell state");
    aEvolve->add_option("--init-zero-prob", evolveArgs.initZeroProb,
                        "zero bias of the initial population (default 0.5)");
    aEvolve->add_option("--out", evolveArgs.out, "output prefix");

    ApoptoticTransectArgs transectArgs;
    CLI::App* aTransect = apoptotic->add_subcommand("transect", "transect enrichment report");
    aTransect->add_option("--rule-a", transectArgs.ruleA, "first endpoint rule")->required();
    aTransect->add_option("--rule-b", transectArgs.ruleB, "second endpoint rule")->required();
    aTransect->add_option("--transects", transectArgs.transects, "number of random transects");
    aTransect->add_option("--random", transectArgs.random, "number of random baseline rules");
    aTransect->add_option("--arena", transectArgs.arena, "arena WxH");
    aTransect->add_option("--out", transectArgs.out, "report path");

    SpArgs spArgs;
    CLI::App* sp = app.add_subcommand("sp", "single-parent crossover enlargement run");
    sp->add_option("--ancestor", spArgs.ancestor, "ancestor rule file")->required();
    sp->add_option("--arena", spArgs.arena, "arena WxH (default 401x401)");
    sp->add_option("--pop", spArgs.pop, "population size");
    sp->add_option("--gens", spArgs.gens, "generations");
    sp->add_option("--rate", spArgs.rate, "single-parent crossover rate (default 0.5)");
    sp->add_option("--mutations", spArgs.mutations, "point mutations per child");
    sp->add_option("--seed-state", spArgs.seedState, "initial cell state");
    sp->add_option("--out", spArgs.out, "output prefix");

    DwpArgs dwpArgs;
    CLI::App* dwp = app.add_subcommand("dwp", "do-what's-possible room layout on a Voronoi network");
    dwp->add_option("--sda", dwpArgs.sda, "self-driving automaton file (default: random)");
    dwp->add_option("--sda-states", dwpArgs.sdaStates, "states for the random SDA");
    dwp->add_option("--sda-emit", dwpArgs.sdaEmit, "max emission length for the random SDA");
    dwp->add_option("--grid", dwpArgs.voronoi.grid, "K for a regular KxK lattice of centers");
    dwp->add_option("--random", dwpArgs.voronoi.random, "N random centers");
    dwp->add_option("--extra", dwpArgs.voronoi.extra, "M extra random centers");
    dwp->add_option("--size", dwpArgs.voronoi.size, "arena WxH (default 201x201)");
    dwp->add_option("--jitter", dwpArgs.voronoi.jitter, "center weight jitter (default 0.1)");
    dwp->add_option("--budget", dwpArgs.budget, "room proposals to attempt");
    dwp->add_option("--out", dwpArgs.out, "output prefix");

    CLI::App* fashion = app.add_subcommand("fashion", "fashion-based cellular automata");
    fashion->require_subcommand(1);

    FashionMapArgs mapArgs;
    CLI::App* fMap = fashion->add_subcommand("map", "generate a cavern map");
    fMap->add_option("--matrix", mapArgs.matrix, "competition matrix file (default: random)");
    fMap->add_option("--states", mapArgs.states, "states for the random matrix");
    fMap->add_option("--size", mapArgs.size, "map WxH (default 64x64)");
    fMap->add_option("--steps", mapArgs.steps, "update steps");
    fMap->add_option("--out", mapArgs.out, "output prefix");

    FashionMorphArgs morphArgs;
    CLI::App* fMorph = fashion->add_subcommand("morph", "left-to-right weighted-average morph");
    fMorph->add_option("--a", morphArgs.a, "left matrix file")->required();
    fMorph->add_option("--b", morphArgs.b, "right matrix file")->required();
    fMorph->add_option("--size", morphArgs.size, "image WxH (default 256x64)");
    fMorph->add_option("--steps", morphArgs.steps, "update steps");
    fMorph->add_option("--out", morphArgs.out, "output image path");

    FashionCoevolveArgs coevolveArgs;
    CLI::App* fCoevolve = fashion->add_subcommand("coevolve", "coevolve a convex pair of rules");
    fCoevolve->add_option("--states", coevolveArgs.states, "matrix states (default 4)");
    fCoevolve->add_option("--map-size", coevolveArgs.mapSize, "fitness map WxH (default 32x32)");
    fCoevolve->add_option("--steps", coevolveArgs.steps, "update steps per map");
    fCoevolve->add_option("--tsamples", coevolveArgs.tSamples, "t grid size over [0,1]");
    fCoevolve->add_option("--pop", coevolveArgs.pop, "population size");
    fCoevolve->add_option("--gens", coevolveArgs.gens, "generations");
    fCoevolve->add_option("--sigma", coevolveArgs.sigma, "Gaussian mutation sigma");
    fCoevolve->add_option("--out", coevolveArgs.out, "output prefix");

    CLI::App* polyomino = app.add_subcommand("polyomino", "polyomino math puzzles");
    polyomino->require_subcommand(1);

    PolyConstructArgs constructArgs;
    CLI::App* pConstruct = polyomino->add_subcommand("construct", "build a certified rich puzzle");
    pConstruct->add_option("--rect", constructArgs.rect, "board RxC (default 3x4)");
    pConstruct->add_option("--pieces", constructArgs.pieces,
                           "puzzle file supplying the piece multiset (default: random partition)");
    pConstruct->add_option("--piece-size", constructArgs.pieceSize, "target random piece size");
    pConstruct->add_option("--max-pieces", constructArgs.maxPieces, "piece count cap");
    pConstruct->add_option("--values-lo", constructArgs.valueLo, "smallest board value");
    pConstruct->add_option("--values-hi", constructArgs.valueHi, "largest board value");
    pConstruct->add_option("--out", constructArgs.out, "output prefix");

    PolySolveArgs solveArgs;
    CLI::App* pSolve = polyomino->add_subcommand("solve", "exactly solve a puzzle file");
    pSolve->add_option("--puzzle", solveArgs.puzzle, "puzzle file")->required();
    pSolve->add_flag("--symmetries", solveArgs.symmetries,
                     "let pieces rotate and reflect (default: fixed orientation)");

    PolyNeutralArgs neutralArgs;
    CLI::App* pNeutral = polyomino->add_subcommand("neutral", "emit equivalent puzzles");
    pNeutral->add_option("--puzzle", neutralArgs.puzzle, "certified puzzle file")->required();
    pNeutral->add_option("--count", neutralArgs.count, "number of puzzles to emit");
    pNeutral->add_option("--out", neutralArgs.out, "output prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!seedSet) seed = envOrDefaultSeed();
        if (voronoi->parsed()) return runVoronoi(voronoiArgs, seed);
        if (aRender->parsed()) return runApoptoticRender(renderArgs);
        if (aEvolve->parsed()) return runApoptoticEvolve(evolveArgs, seed);
        if (aTransect->parsed()) return runApoptoticTransect(transectArgs, seed);
        if (sp->parsed()) return runSp(spArgs, seed);
        if (dwp->parsed()) return runDwp(dwpArgs, seed);
        if (fMap->parsed()) return runFashionMap(mapArgs, seed);
        if (fMorph->parsed()) return runFashionMorph(morphArgs, seed);
        if (fCoevolve->parsed()) return runFashionCoevolve(coevolveArgs, seed);
        if (pConstruct->parsed()) return runPolyConstruct(constructArgs, seed);
        if (pSolve->parsed()) return runPolySolve(solveArgs);
        if (pNeutral->parsed()) return runPolyNeutral(neutralArgs, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 1;
}
