#include "richspaces/Polyomino.hpp"

#include "richspaces/Random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace richspaces {

Polyomino Polyomino::fromCells(std::vector<std::pair<int, int>> cells) {
    if (cells.empty()) throw std::invalid_argument("polyomino needs at least one cell");
    int minR = std::numeric_limits<int>::max();
    int minC = std::numeric_limits<int>::max();
    for (const auto& [r, c] : cells) {
        minR = std::min(minR, r);
        minC = std::min(minC, c);
    }
    for (auto& [r, c] : cells) {
        r -= minR;
        c -= minC;
    }
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw std::invalid_argument("polyomino has duplicate cells");

    // Edge connectivity.
    std::vector<std::size_t> stack{0};
    std::vector<bool> seen(cells.size(), false);
    seen[0] = true;
    std::size_t reached = 0;
    auto findCell = [&cells](int r, int c) {
        return std::binary_search(cells.begin(), cells.end(), std::make_pair(r, c));
    };
    while (!stack.empty()) {
        const auto [r, c] = cells[stack.back()];
        stack.pop_back();
        ++reached;
        const int nr[4] = {r - 1, r + 1, r, r};
        const int nc[4] = {c, c, c - 1, c + 1};
        for (int d = 0; d < 4; ++d) {
            if (!findCell(nr[d], nc[d])) continue;
            const auto it = std::lower_bound(cells.begin(), cells.end(),
                                             std::make_pair(nr[d], nc[d]));
            const std::size_t idx = static_cast<std::size_t>(it - cells.begin());
            if (!seen[idx]) {
                seen[idx] = true;
                stack.push_back(idx);
            }
        }
    }
    if (reached != cells.size()) throw std::invalid_argument("polyomino is not edge-connected");

    Polyomino p;
    p.cells = std::move(cells);
    return p;
}

std::vector<Polyomino> expandSymmetries(const Polyomino& piece) {
    std::vector<Polyomino> out;
    for (int mirror = 0; mirror < 2; ++mirror) {
        for (int rot = 0; rot < 4; ++rot) {
            std::vector<std::pair<int, int>> cells;
            cells.reserve(piece.cells.size());
            for (auto [r, c] : piece.cells) {
                if (mirror) c = -c;
                for (int k = 0; k < rot; ++k) {
                    const int nr = c;
                    const int nc = -r;
                    r = nr;
                    c = nc;
                }
                cells.emplace_back(r, c);
            }
            Polyomino candidate = Polyomino::fromCells(std::move(cells));
            if (std::find(out.begin(), out.end(), candidate) == out.end())
                out.push_back(std::move(candidate));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void NumberBoard::validate() const {
    if (rows < 1 || cols < 1) throw std::invalid_argument("board dimensions must be positive");
    if (values.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("board value count mismatch");
    for (int v : values)
        if (v < 1) throw std::invalid_argument("board values must be at least 1");
}

void Puzzle::validate() const {
    board.validate();
    long long pieceArea = 0;
    for (const Polyomino& p : pieces) {
        if (p.cells.empty()) throw std::invalid_argument("empty piece");
        pieceArea += p.size();
    }
    if (pieceArea > static_cast<long long>(board.rows) * board.cols)
        throw std::invalid_argument("total piece area exceeds the board");
}

long long pieceScore(std::span<const int> values) {
    if (values.empty()) throw std::invalid_argument("piece covers no cells");
    long long sum = 0;
    long long product = 1;
    for (int v : values) {
        if (v < 1) throw std::invalid_argument("piece values must be at least 1");
        sum += v;
        if (product > std::numeric_limits<long long>::max() / v)
            throw std::overflow_error("piece product overflow");
        product *= v;
    }
    return std::max(sum, product);
}

namespace {

void checkGuard(long long area, std::size_t pieceCount, const SolveGuard& guard) {
    if (area > guard.maxBoardArea || area > 64 ||
        pieceCount > static_cast<std::size_t>(guard.maxPieces))
        throw std::runtime_error("instance too large for exact solver");
}

struct PieceOption {
    std::uint64_t mask = 0;
    long long score = 0;
    int row = 0, col = 0;
    std::vector<std::pair<int, int>> covered;
};

std::vector<PieceOption> placementOptions(const Polyomino& piece, const NumberBoard& board) {
    std::vector<PieceOption> options;
    int height = 0, width = 0;
    for (const auto& [r, c] : piece.cells) {
        height = std::max(height, r + 1);
        width = std::max(width, c + 1);
    }
    for (int ar = 0; ar + height <= board.rows; ++ar) {
        for (int ac = 0; ac + width <= board.cols; ++ac) {
            PieceOption opt;
            opt.row = ar;
            opt.col = ac;
            std::vector<int> vals;
            vals.reserve(piece.cells.size());
            for (const auto& [r, c] : piece.cells) {
                const int br = ar + r;
                const int bc = ac + c;
                opt.mask |= std::uint64_t{1} << (br * board.cols + bc);
                opt.covered.emplace_back(br, bc);
                vals.push_back(board.at(br, bc));
            }
            opt.score = pieceScore(vals);
            options.push_back(std::move(opt));
        }
    }
    return options;
}

} // namespace

Solution solve(const Puzzle& puzzle, const SolveGuard& guard, bool allowSymmetries) {
    puzzle.validate();
    const long long area = static_cast<long long>(puzzle.board.rows) * puzzle.board.cols;
    checkGuard(area, puzzle.pieces.size(), guard);

    const std::size_t k = puzzle.pieces.size();

    // Identical pieces sit next to each other in search order so their
    // interchangeability can be pruned away.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return puzzle.pieces[a] < puzzle.pieces[b];
    });

    std::vector<std::vector<PieceOption>> options(k);
    std::vector<long long> suffixBound(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (allowSymmetries) {
            for (const Polyomino& oriented : expandSymmetries(puzzle.pieces[order[i]])) {
                auto opts = placementOptions(oriented, puzzle.board);
                options[i].insert(options[i].end(), opts.begin(), opts.end());
            }
        } else {
            options[i] = placementOptions(puzzle.pieces[order[i]], puzzle.board);
        }
    }
    for (std::size_t i = k; i-- > 0;) {
        long long maxOpt = 0;
        for (const PieceOption& o : options[i]) maxOpt = std::max(maxOpt, o.score);
        suffixBound[i] = suffixBound[i + 1] + maxOpt;
    }

    constexpr int kSkipped = -1;
    std::vector<int> choice(k, kSkipped);
    std::vector<int> bestChoice;
    long long bestScore = -1;

    auto dfs = [&](auto&& self, std::size_t idx, std::uint64_t used, long long score) -> void {
        if (score + suffixBound[idx] <= bestScore) return;
        if (idx == k) {
            bestScore = score;
            bestChoice.assign(choice.begin(), choice.end());
            return;
        }
        const bool sameAsPrev = idx > 0 && puzzle.pieces[order[idx]] == puzzle.pieces[order[idx - 1]];
        int firstOption = 0;
        if (sameAsPrev) {
            if (choice[idx - 1] == kSkipped) {
                // Identical predecessor skipped: skipping is the only
                // non-redundant move.
                choice[idx] = kSkipped;
                self(self, idx + 1, used, score);
                return;
            }
            firstOption = choice[idx - 1] + 1;
        }
        for (int oi = firstOption; oi < static_cast<int>(options[idx].size()); ++oi) {
            const PieceOption& o = options[idx][oi];
            if (used & o.mask) continue;
            choice[idx] = oi;
            self(self, idx + 1, used | o.mask, score + o.score);
        }
        choice[idx] = kSkipped;
        self(self, idx + 1, used, score);
    };
    dfs(dfs, 0, 0, 0);

    Solution solution;
    solution.score = bestScore;
    for (std::size_t i = 0; i < k; ++i) {
        if (bestChoice[i] == kSkipped) continue;
        const PieceOption& o = options[i][bestChoice[i]];
        Placement p;
        p.pieceIndex = static_cast<int>(order[i]);
        p.row = o.row;
        p.col = o.col;
        p.covered = o.covered;
        solution.placements.push_back(std::move(p));
    }
    std::sort(solution.placements.begin(), solution.placements.end(),
              [](const Placement& a, const Placement& b) { return a.pieceIndex < b.pieceIndex; });
    return solution;
}

std::vector<Tiling> enumerateTilings(int rows, int cols, std::span<const Polyomino> pieces,
                                     const SolveGuard& guard) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("rectangle dimensions must be positive");
    const long long area = static_cast<long long>(rows) * cols;
    checkGuard(area, pieces.size(), guard);
    long long pieceArea = 0;
    for (const Polyomino& p : pieces) pieceArea += p.size();
    if (pieceArea != area) throw std::invalid_argument("piece area does not match the rectangle");

    // Distinct shapes with multiplicity; remember original indices so tilings
    // can name concrete pieces deterministically.
    std::vector<Polyomino> shapes;
    std::vector<std::vector<int>> shapeOwners;
    std::vector<std::size_t> sorted(pieces.size());
    std::iota(sorted.begin(), sorted.end(), 0);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](std::size_t a, std::size_t b) { return pieces[a] < pieces[b]; });
    for (std::size_t i : sorted) {
        if (shapes.empty() || !(shapes.back() == pieces[i])) {
            shapes.push_back(pieces[i]);
            shapeOwners.emplace_back();
        }
        shapeOwners.back().push_back(static_cast<int>(i));
    }

    std::vector<int> remaining(shapes.size());
    std::vector<std::size_t> usedOfShape(shapes.size(), 0);
    for (std::size_t s = 0; s < shapes.size(); ++s)
        remaining[s] = static_cast<int>(shapeOwners[s].size());

    std::vector<Tiling> tilings;
    Tiling current;
    const std::uint64_t full = area == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << area) - 1;

    auto dfs = [&](auto&& self, std::uint64_t used) -> void {
        if (used == full) {
            tilings.push_back(current);
            return;
        }
        int first = 0;
        while (used & (std::uint64_t{1} << first)) ++first;
        const int fr = first / cols;
        const int fc = first % cols;

        for (std::size_t s = 0; s < shapes.size(); ++s) {
            if (remaining[s] == 0) continue;
            const Polyomino& shape = shapes[s];
            // The piece's row-major-first cell must land on the first
            // uncovered cell; anything else double-covers or leaves it behind.
            const int anchorRow = fr;
            const int anchorCol = fc - shape.cells[0].second;
            std::uint64_t mask = 0;
            bool fits = true;
            for (const auto& [r, c] : shape.cells) {
                const int br = anchorRow + r;
                const int bc = anchorCol + c;
                if (br < 0 || br >= rows || bc < 0 || bc >= cols) {
                    fits = false;
                    break;
                }
                const std::uint64_t bit = std::uint64_t{1} << (br * cols + bc);
                if (used & bit) {
                    fits = false;
                    break;
                }
                mask |= bit;
            }
            if (!fits) continue;

            Placement p;
            p.pieceIndex = shapeOwners[s][usedOfShape[s]];
            p.row = anchorRow;
            p.col = anchorCol;
            p.covered.reserve(shape.cells.size());
            for (const auto& [r, c] : shape.cells)
                p.covered.emplace_back(anchorRow + r, anchorCol + c);

            --remaining[s];
            ++usedOfShape[s];
            current.push_back(std::move(p));
            self(self, used | mask);
            current.pop_back();
            --usedOfShape[s];
            ++remaining[s];
        }
    };
    dfs(dfs, 0);
    return tilings;
}

Grouping optimalGrouping(std::vector<int> numbers, std::vector<int> sizes,
                         const SolveGuard& guard) {
    const long long totalSize = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    if (totalSize != static_cast<long long>(numbers.size()))
        throw std::invalid_argument("group sizes do not match the number count");
    checkGuard(static_cast<long long>(numbers.size()), sizes.size(), guard);
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("group sizes must be positive");
    for (int v : numbers)
        if (v < 1) throw std::invalid_argument("numbers must be at least 1");

    std::sort(numbers.begin(), numbers.end());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());

    const std::size_t k = sizes.size();
    std::vector<std::vector<int>> groups(k);
    std::vector<std::vector<int>> best;
    long long bestScore = -1;

    auto scoreOf = [](const std::vector<std::vector<int>>& gs) {
        long long total = 0;
        for (const auto& g : gs) total += pieceScore(g);
        return total;
    };

    auto dfs = [&](auto&& self, std::size_t idx, std::size_t prevChoice) -> void {
        if (idx == numbers.size()) {
            const long long score = scoreOf(groups);
            if (score > bestScore) {
                bestScore = score;
                best = groups;
            }
            return;
        }
        const bool sameAsPrev = idx > 0 && numbers[idx] == numbers[idx - 1];
        for (std::size_t j = 0; j < k; ++j) {
            if (groups[j].size() == static_cast<std::size_t>(sizes[j])) continue;
            if (sameAsPrev && j < prevChoice) continue;
            // Interchangeable groups: same capacity, same content so far.
            bool duplicate = false;
            for (std::size_t j2 = 0; j2 < j; ++j2) {
                if (sizes[j2] == sizes[j] && groups[j2] == groups[j]) {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate) continue;
            groups[j].push_back(numbers[idx]);
            self(self, idx + 1, j);
            groups[j].pop_back();
        }
    };
    dfs(dfs, 0, 0);

    Grouping result;
    result.score = bestScore;
    result.groups = std::move(best);
    std::vector<long long> groupScores;
    for (auto& g : result.groups) {
        std::sort(g.begin(), g.end(), std::greater<>());
        groupScores.push_back(pieceScore(g));
    }
    std::vector<std::size_t> order(result.groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ga = result.groups[a];
        const auto& gb = result.groups[b];
        if (ga.size() != gb.size()) return ga.size() > gb.size();
        if (groupScores[a] != groupScores[b]) return groupScores[a] > groupScores[b];
        return ga > gb;
    });
    std::vector<std::vector<int>> reordered;
    reordered.reserve(order.size());
    for (std::size_t i : order) reordered.push_back(std::move(result.groups[i]));
    result.groups = std::move(reordered);
    return result;
}

namespace {

// Groups are matched to tiling pieces by size, descending, with size ties
// resolved in enumeration order on the tiling side and canonical order on the
// grouping side.
NumberBoard boardFromAssignment(int rows, int cols, const Grouping& grouping,
                                const Tiling& tiling) {
    if (grouping.groups.size() != tiling.size())
        throw std::invalid_argument("group count does not match the tiling");

    std::vector<std::size_t> pieceOrder(tiling.size());
    std::iota(pieceOrder.begin(), pieceOrder.end(), 0);
    std::stable_sort(pieceOrder.begin(), pieceOrder.end(), [&](std::size_t a, std::size_t b) {
        return tiling[a].covered.size() > tiling[b].covered.size();
    });

    NumberBoard board;
    board.rows = rows;
    board.cols = cols;
    board.values.assign(static_cast<std::size_t>(rows) * cols, 0);
    for (std::size_t i = 0; i < pieceOrder.size(); ++i) {
        const Placement& p = tiling[pieceOrder[i]];
        const std::vector<int>& group = grouping.groups[i];
        if (group.size() != p.covered.size())
            throw std::invalid_argument("group sizes do not match the tiling pieces");
        for (std::size_t c = 0; c < group.size(); ++c)
            board.at(p.covered[c].first, p.covered[c].second) = group[c];
    }
    board.validate();
    return board;
}

} // namespace

RichPuzzle constructRichPuzzle(int rows, int cols, std::vector<Polyomino> pieces,
                               std::vector<int> numbers, std::uint64_t seed,
                               const SolveGuard& guard) {
    if (numbers.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("need exactly one number per board cell");

    const std::vector<Tiling> tilings = enumerateTilings(rows, cols, pieces, guard);
    if (tilings.empty()) throw std::runtime_error("pieces cannot tile the rectangle");

    Rng rng(seed);
    const Tiling& tiling = tilings[rng.below(tilings.size())];

    std::vector<int> sizes;
    sizes.reserve(pieces.size());
    for (const Polyomino& p : pieces) sizes.push_back(p.size());
    Grouping grouping = optimalGrouping(numbers, sizes, guard);

    RichPuzzle rich;
    rich.puzzle.board = boardFromAssignment(rows, cols, grouping, tiling);
    rich.puzzle.pieces = std::move(pieces);
    rich.certificate.tiling = tiling;
    rich.certificate.score = grouping.score;
    rich.certificate.grouping = std::move(grouping);
    return rich;
}

RichPuzzle neutralPermute(const RichPuzzle& rich, std::uint64_t seed) {
    RichPuzzle out = rich;
    Rng rng(seed);
    for (const Placement& p : rich.certificate.tiling) {
        std::vector<int> vals;
        vals.reserve(p.covered.size());
        for (const auto& [r, c] : p.covered) vals.push_back(out.puzzle.board.at(r, c));
        for (std::size_t i = vals.size(); i > 1; --i)
            std::swap(vals[i - 1], vals[rng.below(i)]);
        for (std::size_t i = 0; i < vals.size(); ++i)
            out.puzzle.board.at(p.covered[i].first, p.covered[i].second) = vals[i];
    }
    return out;
}

std::vector<RichPuzzle> neutralRetile(const RichPuzzle& rich, const SolveGuard& guard) {
    const std::vector<Tiling> tilings =
        enumerateTilings(rich.puzzle.board.rows, rich.puzzle.board.cols, rich.puzzle.pieces, guard);
    std::vector<RichPuzzle> out;
    out.reserve(tilings.size());
    for (const Tiling& tiling : tilings) {
        RichPuzzle next;
        next.puzzle.board = boardFromAssignment(rich.puzzle.board.rows, rich.puzzle.board.cols,
                                                rich.certificate.grouping, tiling);
        next.puzzle.pieces = rich.puzzle.pieces;
        next.certificate.tiling = tiling;
        next.certificate.grouping = rich.certificate.grouping;
        next.certificate.score = rich.certificate.score;
        out.push_back(std::move(next));
    }
    return out;
}

std::uint64_t neutralNetworkSize(const RichPuzzle& rich, const SolveGuard& guard,
                                 std::uint64_t maxBoards) {
    const std::vector<Tiling> tilings =
        enumerateTilings(rich.puzzle.board.rows, rich.puzzle.board.cols, rich.puzzle.pieces, guard);

    std::set<std::vector<int>> boards;
    for (const Tiling& tiling : tilings) {
        NumberBoard base = boardFromAssignment(rich.puzzle.board.rows, rich.puzzle.board.cols,
                                               rich.certificate.grouping, tiling);
        // Per-piece multiset permutations, combined across pieces.
        std::vector<std::vector<int>> perms(tiling.size());
        for (std::size_t i = 0; i < tiling.size(); ++i) {
            perms[i].reserve(tiling[i].covered.size());
            for (const auto& [r, c] : tiling[i].covered) perms[i].push_back(base.at(r, c));
            std::sort(perms[i].begin(), perms[i].end());
        }
        auto emit = [&](auto&& self, std::size_t pieceIdx, NumberBoard& board) -> void {
            if (pieceIdx == tiling.size()) {
                boards.insert(board.values);
                if (boards.size() > maxBoards)
                    throw std::runtime_error("neutral network too large to enumerate");
                return;
            }
            std::vector<int>& vals = perms[pieceIdx];
            const Placement& p = tiling[pieceIdx];
            do {
                for (std::size_t i = 0; i < vals.size(); ++i)
                    board.at(p.covered[i].first, p.covered[i].second) = vals[i];
                self(self, pieceIdx + 1, board);
            } while (std::next_permutation(vals.begin(), vals.end()));
        };
        NumberBoard scratch = base;
        emit(emit, 0, scratch);
    }
    return boards.size();
}

std::vector<Polyomino> randomPartition(int rows, int cols, int targetPieceSize, int maxPieces,
                                       std::uint64_t seed) {
    if (rows < 1 || cols < 1 || targetPieceSize < 1 || maxPieces < 2)
        throw std::invalid_argument("bad partition parameters");
    const int area = rows * cols;
    Rng rng(seed);

    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<std::uint8_t> covered(static_cast<std::size_t>(area), 0);
        int coveredCount = 0;
        std::vector<Polyomino> pieces;
        bool failed = false;

        while (coveredCount < area) {
            if (static_cast<int>(pieces.size()) == maxPieces) {
                failed = true;
                break;
            }
            int start = 0;
            while (covered[start]) ++start;

            const int remaining = area - coveredCount;
            int target = targetPieceSize + static_cast<int>(rng.below(3)) - 1;
            target = std::clamp(target, 1, remaining);

            std::vector<int> region{start};
            covered[start] = 1;
            while (static_cast<int>(region.size()) < target) {
                std::vector<int> frontier;
                for (int cell : region) {
                    const int r = cell / cols;
                    const int c = cell % cols;
                    const int nr[4] = {r - 1, r + 1, r, r};
                    const int nc[4] = {c, c, c - 1, c + 1};
                    for (int d = 0; d < 4; ++d) {
                        if (nr[d] < 0 || nr[d] >= rows || nc[d] < 0 || nc[d] >= cols) continue;
                        const int n = nr[d] * cols + nc[d];
                        if (!covered[n] && std::find(frontier.begin(), frontier.end(), n) ==
                                               frontier.end())
                            frontier.push_back(n);
                    }
                }
                if (frontier.empty()) break;
                const int pick = frontier[rng.below(frontier.size())];
                covered[pick] = 1;
                region.push_back(pick);
            }

            std::vector<std::pair<int, int>> cells;
            cells.reserve(region.size());
            for (int cell : region) cells.emplace_back(cell / cols, cell % cols);
            pieces.push_back(Polyomino::fromCells(std::move(cells)));
            coveredCount += static_cast<int>(region.size());
        }

        if (!failed && pieces.size() >= 2) return pieces;
    }
    throw std::runtime_error("could not partition the rectangle");
}

std::string formatPuzzle(const Puzzle& puzzle, const Certificate* certificate) {
    std::ostringstream out;
    out << "richspaces-puzzle 1\n";
    out << "board " << puzzle.board.rows << ' ' << puzzle.board.cols << '\n';
    for (int r = 0; r < puzzle.board.rows; ++r) {
        for (int c = 0; c < puzzle.board.cols; ++c) {
            if (c) out << ' ';
            out << puzzle.board.at(r, c);
        }
        out << '\n';
    }
    out << "pieces " << puzzle.pieces.size() << '\n';
    for (const Polyomino& p : puzzle.pieces) {
        out << p.size();
        for (const auto& [r, c] : p.cells) out << ' ' << r << ',' << c;
        out << '\n';
    }
    if (certificate) {
        out << "certificate " << certificate->score << '\n';
        out << "tiling " << certificate->tiling.size() << '\n';
        for (const Placement& p : certificate->tiling)
            out << p.pieceIndex << ' ' << p.row << ' ' << p.col << '\n';
        out << "groups " << certificate->grouping.groups.size() << '\n';
        for (const auto& g : certificate->grouping.groups) {
            out << g.size();
            for (int v : g) out << ' ' << v;
            out << '\n';
        }
    }
    return out.str();
}

ParsedPuzzle parsePuzzle(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int version;
    if (!(in >> magic >> version) || magic != "richspaces-puzzle" || version != 1)
        throw std::runtime_error("not a puzzle file");

    ParsedPuzzle parsed;
    std::string word;
    if (!(in >> word >> parsed.puzzle.board.rows >> parsed.puzzle.board.cols) || word != "board")
        throw std::runtime_error("bad board header");
    const long long area =
        static_cast<long long>(parsed.puzzle.board.rows) * parsed.puzzle.board.cols;
    parsed.puzzle.board.values.resize(static_cast<std::size_t>(area));
    for (int& v : parsed.puzzle.board.values)
        if (!(in >> v)) throw std::runtime_error("truncated board values");

    std::size_t pieceCount;
    if (!(in >> word >> pieceCount) || word != "pieces")
        throw std::runtime_error("bad pieces header");
    for (std::size_t i = 0; i < pieceCount; ++i) {
        int size;
        if (!(in >> size) || size < 1) throw std::runtime_error("bad piece size");
        std::vector<std::pair<int, int>> cells(size);
        for (auto& [r, c] : cells) {
            char comma;
            if (!(in >> r >> comma >> c) || comma != ',') throw std::runtime_error("bad piece cell");
        }
        parsed.puzzle.pieces.push_back(Polyomino::fromCells(std::move(cells)));
    }
    parsed.puzzle.validate();

    if (in >> word) {
        if (word != "certificate") throw std::runtime_error("unexpected trailing content");
        Certificate cert;
        if (!(in >> cert.score)) throw std::runtime_error("bad certificate score");
        std::size_t n;
        if (!(in >> word >> n) || word != "tiling") throw std::runtime_error("bad tiling header");
        cert.tiling.resize(n);
        for (Placement& p : cert.tiling) {
            if (!(in >> p.pieceIndex >> p.row >> p.col))
                throw std::runtime_error("bad tiling record");
            if (p.pieceIndex < 0 || p.pieceIndex >= static_cast<int>(parsed.puzzle.pieces.size()))
                throw std::runtime_error("tiling references a missing piece");
            for (const auto& [r, c] : parsed.puzzle.pieces[p.pieceIndex].cells)
                p.covered.emplace_back(p.row + r, p.col + c);
        }
        if (!(in >> word >> n) || word != "groups") throw std::runtime_error("bad groups header");
        cert.grouping.groups.resize(n);
        for (auto& g : cert.grouping.groups) {
            std::size_t size;
            if (!(in >> size)) throw std::runtime_error("bad group size");
            g.resize(size);
            for (int& v : g)
                if (!(in >> v)) throw std::runtime_error("bad group value");
        }
        cert.grouping.score = cert.score;
        parsed.certificate = std::move(cert);
    }
    return parsed;
}

} // namespace richspaces
