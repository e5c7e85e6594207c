#include "richspaces/Polyomino.hpp"
#include "richspaces/Random.hpp"

#include "TestOracles.hpp"

#include <doctest.h>

#include <set>

using namespace richspaces;

namespace {

Polyomino dominoH() { return Polyomino::fromCells({{0, 0}, {0, 1}}); }
Polyomino dominoV() { return Polyomino::fromCells({{0, 0}, {1, 0}}); }
Polyomino monomino() { return Polyomino::fromCells({{0, 0}}); }

NumberBoard boardOf(int rows, int cols, std::vector<int> vals) {
    NumberBoard b;
    b.rows = rows;
    b.cols = cols;
    b.values = std::move(vals);
    return b;
}

} // namespace

TEST_CASE("polyomino normalization and validation") {
    const Polyomino p = Polyomino::fromCells({{3, 5}, {3, 4}, {4, 4}});
    CHECK(p.cells == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}});
    CHECK_THROWS(Polyomino::fromCells({}));
    CHECK_THROWS(Polyomino::fromCells({{0, 0}, {0, 0}}));
    CHECK_THROWS(Polyomino::fromCells({{0, 0}, {1, 1}})); // diagonal is not edge-connected
}

TEST_CASE("expandSymmetries") {
    CHECK(expandSymmetries(monomino()).size() == 1);
    const auto dominoOrbits = expandSymmetries(dominoH());
    CHECK(dominoOrbits.size() == 2); // horizontal + vertical
    const Polyomino ell = Polyomino::fromCells({{0, 0}, {1, 0}, {1, 1}});
    CHECK(expandSymmetries(ell).size() == 4);
}

TEST_CASE("piece_score") {
    CHECK(pieceScore(std::vector<int>{2, 3}) == 6);   // product wins
    CHECK(pieceScore(std::vector<int>{1, 1}) == 2);   // sum wins
    CHECK(pieceScore(std::vector<int>{1, 2, 3}) == 6); // tie
    CHECK(pieceScore(std::vector<int>{7}) == 7);
    CHECK_THROWS(pieceScore(std::vector<int>{}));
    CHECK_THROWS(pieceScore(std::vector<int>{0, 2}));

    SUBCASE("score dominates both the max value and the group size") {
        Rng rng(606);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> vals;
            const int n = 1 + static_cast<int>(rng.below(6));
            int maxVal = 1;
            for (int i = 0; i < n; ++i) {
                vals.push_back(1 + static_cast<int>(rng.below(9)));
                maxVal = std::max(maxVal, vals.back());
            }
            const long long score = pieceScore(vals);
            CHECK(score >= maxVal);
            CHECK(score >= n);
        }
    }
}

TEST_CASE("solve reference cases") {
    SUBCASE("1x2 board [2,3] with one domino") {
        const Puzzle puzzle{boardOf(1, 2, {2, 3}), {dominoH()}};
        const Solution s = solve(puzzle);
        CHECK(s.score == 6);
        REQUIRE(s.placements.size() == 1);
    }
    SUBCASE("2x2 all-ones board with one domino") {
        const Puzzle puzzle{boardOf(2, 2, {1, 1, 1, 1}), {dominoH()}};
        CHECK(solve(puzzle).score == 2);
    }
    SUBCASE("1x3 board [9,1,9] with one domino") {
        const Puzzle puzzle{boardOf(1, 3, {9, 1, 9}), {dominoH()}};
        CHECK(solve(puzzle).score == 10);
    }
    SUBCASE("skipping can beat placing is impossible with values >= 1; empty piece set scores 0") {
        const Puzzle puzzle{boardOf(2, 2, {5, 5, 5, 5}), {}};
        CHECK(solve(puzzle).score == 0);
    }
    SUBCASE("guard rejects oversized instances") {
        const Puzzle puzzle{boardOf(5, 4, std::vector<int>(20, 1)), {dominoH()}};
        CHECK_THROWS_WITH(solve(puzzle), "instance too large for exact solver");
    }
}

TEST_CASE("solve agrees with the exhaustive subset oracle") {
    Rng rng(2718);
    for (int trial = 0; trial < 120; ++trial) {
        const int rows = 2 + static_cast<int>(rng.below(2));        // 2..3
        const int cols = 2 + static_cast<int>(rng.below(3));        // 2..4
        Puzzle puzzle;
        puzzle.board.rows = rows;
        puzzle.board.cols = cols;
        for (int i = 0; i < rows * cols; ++i)
            puzzle.board.values.push_back(1 + static_cast<int>(rng.below(9)));
        const Polyomino shapes[4] = {monomino(), dominoH(), dominoV(),
                                     Polyomino::fromCells({{0, 0}, {1, 0}, {1, 1}})};
        const int nPieces = 1 + static_cast<int>(rng.below(3));
        int pieceArea = 0;
        for (int p = 0; p < nPieces; ++p) {
            const Polyomino& shape = shapes[rng.below(4)];
            if (pieceArea + shape.size() > rows * cols) break;
            pieceArea += shape.size();
            puzzle.pieces.push_back(shape);
        }
        CHECK(solve(puzzle).score == oracle::bruteForceSolve(puzzle));
    }
}

TEST_CASE("solve with symmetry expansion may beat the fixed orientation") {
    // A vertical strip of big values; a horizontal domino can only reach one.
    const Puzzle puzzle{boardOf(2, 2, {9, 1, 9, 1}), {dominoH()}};
    CHECK(solve(puzzle).score == 10);                      // fixed: sum 9+1
    CHECK(solve(puzzle, SolveGuard{}, true).score == 81);  // rotated: 9*9
    SUBCASE("symmetry never hurts") {
        Rng rng(424);
        for (int trial = 0; trial < 20; ++trial) {
            Puzzle p;
            p.board.rows = 2;
            p.board.cols = 3;
            for (int i = 0; i < 6; ++i)
                p.board.values.push_back(1 + static_cast<int>(rng.below(9)));
            p.pieces = {dominoH(), Polyomino::fromCells({{0, 0}, {1, 0}, {1, 1}})};
            CHECK(solve(p, SolveGuard{}, true).score >= solve(p).score);
        }
    }
}

TEST_CASE("solve placements are disjoint and score what they claim") {
    Rng rng(31415);
    for (int trial = 0; trial < 40; ++trial) {
        Puzzle puzzle;
        puzzle.board.rows = 3;
        puzzle.board.cols = 4;
        for (int i = 0; i < 12; ++i)
            puzzle.board.values.push_back(1 + static_cast<int>(rng.below(9)));
        for (const Polyomino& p : randomPartition(3, 4, 3, 5, rng.u64()))
            puzzle.pieces.push_back(p);
        const Solution s = solve(puzzle);

        std::set<std::pair<int, int>> seen;
        long long total = 0;
        for (const Placement& p : s.placements) {
            std::vector<int> vals;
            for (const auto& cell : p.covered) {
                CHECK(seen.insert(cell).second); // no overlap
                CHECK(cell.first >= 0);
                CHECK(cell.first < 3);
                CHECK(cell.second >= 0);
                CHECK(cell.second < 4);
                vals.push_back(puzzle.board.at(cell.first, cell.second));
            }
            total += pieceScore(vals);
        }
        CHECK(total == s.score);
    }
}

TEST_CASE("enumerate_tilings") {
    SUBCASE("2x2 with two horizontal dominoes has exactly one tiling") {
        const std::vector<Polyomino> pieces{dominoH(), dominoH()};
        CHECK(enumerateTilings(2, 2, pieces).size() == 1);
    }
    SUBCASE("2x2 with one horizontal and one vertical domino has none") {
        const std::vector<Polyomino> pieces{dominoH(), dominoV()};
        CHECK(enumerateTilings(2, 2, pieces).empty());
    }
    SUBCASE("1x1 with a monomino has one tiling") {
        const std::vector<Polyomino> pieces{monomino()};
        CHECK(enumerateTilings(1, 1, pieces).size() == 1);
    }
    SUBCASE("area mismatch throws") {
        const std::vector<Polyomino> pieces{dominoH()};
        CHECK_THROWS(enumerateTilings(2, 2, pieces));
    }
    SUBCASE("2x4 with four monominoes and two dominoes of each kind") {
        // Cross-check a mixed multiset against hand counting on a small board:
        // 2x2 with two monominoes and one domino (H or V).
        const std::vector<Polyomino> withH{monomino(), monomino(), dominoH()};
        CHECK(enumerateTilings(2, 2, withH).size() == 2);
        const std::vector<Polyomino> withV{monomino(), monomino(), dominoV()};
        CHECK(enumerateTilings(2, 2, withV).size() == 2);
    }
    SUBCASE("every tiling covers the rectangle exactly once") {
        const std::vector<Polyomino> pieces = randomPartition(3, 4, 3, 5, 5);
        for (const Tiling& t : enumerateTilings(3, 4, pieces)) {
            std::set<std::pair<int, int>> seen;
            for (const Placement& p : t)
                for (const auto& cell : p.covered) CHECK(seen.insert(cell).second);
            CHECK(seen.size() == 12);
        }
    }
}

TEST_CASE("optimal_grouping") {
    SUBCASE("numbers {2,3,4,5} into sizes {2,2}") {
        const Grouping g = optimalGrouping({2, 3, 4, 5}, {2, 2});
        CHECK(g.score == 26);
        REQUIRE(g.groups.size() == 2);
        CHECK(g.groups[0] == std::vector<int>{5, 4});
        CHECK(g.groups[1] == std::vector<int>{3, 2});
    }
    SUBCASE("single number") {
        const Grouping g = optimalGrouping({1}, {1});
        CHECK(g.score == 1);
    }
    SUBCASE("all ones is grouping-invariant") {
        const Grouping g = optimalGrouping({1, 1, 1, 1}, {2, 2});
        CHECK(g.score == 4);
    }
    SUBCASE("size mismatch throws") { CHECK_THROWS(optimalGrouping({1, 2, 3}, {2, 2})); }
    SUBCASE("matches brute force over random instances") {
        // Brute force: recurse without any deduplication.
        auto bruteBest = [](std::vector<int> numbers, std::vector<int> sizes) {
            std::vector<std::vector<int>> groups(sizes.size());
            long long best = -1;
            auto rec = [&](auto&& self, std::size_t idx) -> void {
                if (idx == numbers.size()) {
                    long long total = 0;
                    for (const auto& g : groups) total += pieceScore(g);
                    best = std::max(best, total);
                    return;
                }
                for (std::size_t j = 0; j < sizes.size(); ++j) {
                    if (groups[j].size() == static_cast<std::size_t>(sizes[j])) continue;
                    groups[j].push_back(numbers[idx]);
                    self(self, idx + 1);
                    groups[j].pop_back();
                }
            };
            rec(rec, 0);
            return best;
        };
        Rng rng(161803);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<int> sizes;
            int total = 0;
            while (total < 6) {
                const int s = 2 + static_cast<int>(rng.below(2));
                sizes.push_back(s);
                total += s;
            }
            std::vector<int> numbers;
            for (int i = 0; i < total; ++i)
                numbers.push_back(1 + static_cast<int>(rng.below(9)));
            CHECK(optimalGrouping(numbers, sizes).score == bruteBest(numbers, sizes));
        }
    }
}

TEST_CASE("construct_rich_puzzle") {
    SUBCASE("2x2 with two horizontal dominoes and numbers {2,3,4,5}") {
        const RichPuzzle rich =
            constructRichPuzzle(2, 2, {dominoH(), dominoH()}, {2, 3, 4, 5}, 1);
        CHECK(rich.certificate.score == 26);
        // Top domino carries {4,5}, bottom {2,3}; descending within a piece.
        CHECK(rich.puzzle.board.values == std::vector<int>{5, 4, 3, 2});
        CHECK(solve(rich.puzzle).score == 26);
    }
    SUBCASE("1x1 monomino with number 7") {
        const RichPuzzle rich = constructRichPuzzle(1, 1, {monomino()}, {7}, 1);
        CHECK(rich.certificate.score == 7);
        CHECK(rich.puzzle.board.values == std::vector<int>{7});
    }
    SUBCASE("1x2 domino with numbers {2,3}") {
        const RichPuzzle rich = constructRichPuzzle(1, 2, {dominoH()}, {2, 3}, 1);
        CHECK(rich.certificate.score == 6);
        CHECK(solve(rich.puzzle).score == 6);
    }
    SUBCASE("untileable input throws") {
        CHECK_THROWS(constructRichPuzzle(2, 2, {dominoH(), dominoV()}, {1, 2, 3, 4}, 1));
    }
    SUBCASE("certificate placements achieve the certified score using all pieces") {
        Rng rng(55);
        for (int trial = 0; trial < 20; ++trial) {
            const auto pieces = randomPartition(3, 3, 3, 4, rng.u64());
            std::vector<int> numbers;
            for (int i = 0; i < 9; ++i) numbers.push_back(1 + static_cast<int>(rng.below(9)));
            const RichPuzzle rich = constructRichPuzzle(3, 3, pieces, numbers, rng.u64());
            CHECK(rich.certificate.tiling.size() == pieces.size());
            long long achieved = 0;
            for (const Placement& p : rich.certificate.tiling) {
                std::vector<int> vals;
                for (const auto& cell : p.covered)
                    vals.push_back(rich.puzzle.board.at(cell.first, cell.second));
                achieved += pieceScore(vals);
            }
            CHECK(achieved == rich.certificate.score);
        }
    }
}

TEST_CASE("neutral_permute keeps the optimum") {
    SUBCASE("swap within the top domino of the worked example") {
        const RichPuzzle rich =
            constructRichPuzzle(2, 2, {dominoH(), dominoH()}, {2, 3, 4, 5}, 1);
        // Find a seed that actually swaps the top pair.
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const RichPuzzle permuted = neutralPermute(rich, seed);
            CHECK(solve(permuted.puzzle).score == 26);
            if (permuted.puzzle.board.values == std::vector<int>{4, 5, 3, 2}) return;
        }
        FAIL("no seed produced the expected swap");
    }
    SUBCASE("property: permuted puzzles solve to the source optimum") {
        Rng rng(77);
        for (int trial = 0; trial < 15; ++trial) {
            const auto pieces = randomPartition(2, 4, 2, 4, rng.u64());
            std::vector<int> numbers;
            for (int i = 0; i < 8; ++i) numbers.push_back(1 + static_cast<int>(rng.below(9)));
            const RichPuzzle rich = constructRichPuzzle(2, 4, pieces, numbers, rng.u64());
            const long long optimum = solve(rich.puzzle).score;
            for (std::uint64_t s = 0; s < 3; ++s)
                CHECK(solve(neutralPermute(rich, s).puzzle).score == optimum);
        }
    }
}

TEST_CASE("neutral_retile") {
    SUBCASE("unique tiling returns the input itself") {
        const RichPuzzle rich = constructRichPuzzle(1, 2, {dominoH()}, {2, 3}, 1);
        const auto retiled = neutralRetile(rich);
        REQUIRE(retiled.size() == 1);
        CHECK(retiled[0].puzzle.board == rich.puzzle.board);
    }
    SUBCASE("2x2 with two monominoes and a domino has two equivalent tilings") {
        const RichPuzzle rich =
            constructRichPuzzle(2, 2, {monomino(), monomino(), dominoH()}, {2, 3, 4, 5}, 1);
        const auto retiled = neutralRetile(rich);
        REQUIRE(retiled.size() == 2);
        for (const RichPuzzle& r : retiled)
            CHECK(solve(r.puzzle).score == rich.certificate.score);
    }
    SUBCASE("property: every retile output solves to the certificate score") {
        Rng rng(88);
        for (int trial = 0; trial < 10; ++trial) {
            const auto pieces = randomPartition(2, 5, 2, 5, rng.u64());
            std::vector<int> numbers;
            for (int i = 0; i < 10; ++i) numbers.push_back(1 + static_cast<int>(rng.below(9)));
            const RichPuzzle rich = constructRichPuzzle(2, 5, pieces, numbers, rng.u64());
            for (const RichPuzzle& r : neutralRetile(rich)) {
                CHECK(solve(r.puzzle).score == rich.certificate.score);
                CHECK(r.certificate.score == rich.certificate.score);
            }
        }
    }
}

TEST_CASE("neutral_network_size") {
    SUBCASE("1x1 monomino puzzle has a single board") {
        const RichPuzzle rich = constructRichPuzzle(1, 1, {monomino()}, {7}, 1);
        CHECK(neutralNetworkSize(rich) == 1);
    }
    SUBCASE("1x2 domino with distinct numbers has the two within-piece orders") {
        const RichPuzzle rich = constructRichPuzzle(1, 2, {dominoH()}, {2, 3}, 1);
        CHECK(neutralNetworkSize(rich) == 2);
    }
    SUBCASE("counts distinct boards only") {
        // Distinct values, two tilings (monomino pair + domino): count by
        // exhaustive enumeration equals the library's number.
        const RichPuzzle rich =
            constructRichPuzzle(2, 2, {monomino(), monomino(), dominoH()}, {2, 3, 4, 5}, 1);
        // Independent recount: brute-force over retiles and permutations.
        std::set<std::vector<int>> boards;
        for (const RichPuzzle& r : neutralRetile(rich)) {
            // per-piece permutations via repeated neutralPermute sampling
            for (std::uint64_t s = 0; s < 200; ++s)
                boards.insert(neutralPermute(r, s).puzzle.board.values);
        }
        CHECK(neutralNetworkSize(rich) == boards.size());
    }
    SUBCASE("identical numbers collapse the network") {
        const RichPuzzle rich = constructRichPuzzle(1, 2, {dominoH()}, {4, 4}, 1);
        CHECK(neutralNetworkSize(rich) == 1);
    }
}

TEST_CASE("puzzle serialization round-trips with certificates") {
    Rng rng(99);
    const auto pieces = randomPartition(3, 4, 3, 5, 12);
    std::vector<int> numbers;
    for (int i = 0; i < 12; ++i) numbers.push_back(1 + static_cast<int>(rng.below(9)));
    const RichPuzzle rich = constructRichPuzzle(3, 4, pieces, numbers, 77);

    const std::string text = formatPuzzle(rich.puzzle, &rich.certificate);
    const ParsedPuzzle parsed = parsePuzzle(text);
    CHECK(parsed.puzzle.board == rich.puzzle.board);
    CHECK(parsed.puzzle.pieces == rich.puzzle.pieces);
    REQUIRE(parsed.certificate.has_value());
    CHECK(parsed.certificate->score == rich.certificate.score);
    REQUIRE(parsed.certificate->tiling.size() == rich.certificate.tiling.size());
    for (std::size_t i = 0; i < rich.certificate.tiling.size(); ++i)
        CHECK(parsed.certificate->tiling[i].covered == rich.certificate.tiling[i].covered);
    CHECK(parsed.certificate->grouping.groups == rich.certificate.grouping.groups);

    const ParsedPuzzle bare = parsePuzzle(formatPuzzle(rich.puzzle, nullptr));
    CHECK_FALSE(bare.certificate.has_value());
    CHECK(bare.puzzle.board == rich.puzzle.board);
}

TEST_CASE("random_partition tiles the rectangle with connected pieces") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto pieces = randomPartition(3, 4, 3, 5, seed);
        CHECK(pieces.size() >= 2);
        CHECK(pieces.size() <= 5);
        long long area = 0;
        for (const auto& p : pieces) area += p.size();
        CHECK(area == 12);
        CHECK_FALSE(enumerateTilings(3, 4, pieces).empty());
    }
}
