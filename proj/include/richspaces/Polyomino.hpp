#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace richspaces {

// Fixed-orientation polyomino, normalized so min row = min col = 0 and cells
// sorted row-major. Pieces are used as-is; symmetry orbits are the caller's
// business (expandSymmetries below).
struct Polyomino {
    std::vector<std::pair<int, int>> cells; // (row, col)

    static Polyomino fromCells(std::vector<std::pair<int, int>> cells);
    int size() const { return static_cast<int>(cells.size()); }

    friend bool operator==(const Polyomino&, const Polyomino&) = default;
    friend auto operator<=>(const Polyomino&, const Polyomino&) = default;
};

// The piece's rotations and reflections as distinct fixed-orientation pieces.
std::vector<Polyomino> expandSymmetries(const Polyomino& piece);

struct NumberBoard {
    int rows = 0, cols = 0;
    std::vector<int> values; // row-major, all >= 1

    int at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
    int& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }

    void validate() const;
    friend bool operator==(const NumberBoard&, const NumberBoard&) = default;
};

struct Placement {
    int pieceIndex = 0;
    int row = 0, col = 0;                     // anchor: shift added to the normalized cells
    std::vector<std::pair<int, int>> covered; // absolute cells, row-major order
};

struct Puzzle {
    NumberBoard board;
    std::vector<Polyomino> pieces;

    void validate() const;
};

// Better of the sum or the product of the covered values.
long long pieceScore(std::span<const int> values);

struct SolveGuard {
    int maxBoardArea = 16;
    int maxPieces = 5;
};

struct Solution {
    long long score = 0;
    std::vector<Placement> placements;
};

// Exact optimum over all disjoint placement subsets; pieces may be skipped.
// By default pieces are used in their given orientation only; allowSymmetries
// expands each piece's placements over its rotation/reflection orbit (still
// at most one placement per piece).
Solution solve(const Puzzle& puzzle, const SolveGuard& guard = {}, bool allowSymmetries = false);

using Tiling = std::vector<Placement>;

// Every partition of the rectangle into the given pieces, by backtracking on
// the first uncovered cell. Identical pieces are interchangeable, so each
// partition appears exactly once, in a deterministic order.
std::vector<Tiling> enumerateTilings(int rows, int cols, std::span<const Polyomino> pieces,
                                     const SolveGuard& guard = {});

struct Grouping {
    std::vector<std::vector<int>> groups; // values sorted descending per group
    long long score = 0;
};

// Exact best partition of the numbers into groups of the given sizes,
// maximizing the summed piece scores. Groups come back ordered by size
// descending, then score descending.
Grouping optimalGrouping(std::vector<int> numbers, std::vector<int> sizes,
                         const SolveGuard& guard = {});

struct Certificate {
    Tiling tiling;
    Grouping grouping;
    long long score = 0;
};

struct RichPuzzle {
    Puzzle puzzle;
    Certificate certificate;
};

// Writes an optimal grouping onto a tiling of the rectangle, producing a
// puzzle whose optimum provably uses every piece and equals the certificate.
RichPuzzle constructRichPuzzle(int rows, int cols, std::vector<Polyomino> pieces,
                               std::vector<int> numbers, std::uint64_t seed,
                               const SolveGuard& guard = {});

// Shuffles values inside each certificate piece; the optimum is unchanged.
RichPuzzle neutralPermute(const RichPuzzle& rich, std::uint64_t seed);

// One equivalent puzzle per tiling of the board, certificate groups matched
// to pieces by size (ties in enumeration order).
std::vector<RichPuzzle> neutralRetile(const RichPuzzle& rich, const SolveGuard& guard = {});

// Number of distinct boards reachable by re-tiling plus within-piece
// permutation. Throws once more than maxBoards boards would be visited.
std::uint64_t neutralNetworkSize(const RichPuzzle& rich, const SolveGuard& guard = {},
                                 std::uint64_t maxBoards = 2000000);

// Random partition of a rectangle into edge-connected pieces; the multiset is
// guaranteed to tile the rectangle. Retries internally until the piece count
// lands in [2, maxPieces].
std::vector<Polyomino> randomPartition(int rows, int cols, int targetPieceSize, int maxPieces,
                                       std::uint64_t seed);

struct ParsedPuzzle {
    Puzzle puzzle;
    std::optional<Certificate> certificate;
};

std::string formatPuzzle(const Puzzle& puzzle, const Certificate* certificate);
ParsedPuzzle parsePuzzle(const std::string& text);

} // namespace richspaces
