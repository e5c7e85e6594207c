#pragma once

#include "richspaces/Image.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace richspaces {

// A weighted Voronoi site. Cost of a point p against this center is
// weight * euclidean_distance(p, center); the lowest cost wins, so larger
// weights shrink a tile.
struct TileCenter {
    double x = 0.0;
    double y = 0.0;
    double weight = 1.0;
};

struct TileGrid {
    int width = 0;
    int height = 0;
    std::vector<int> cells; // row-major tile indices

    int at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
};

struct PathNetwork {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> passable; // row-major, 1 = path cell

    bool at(int x, int y) const { return passable[static_cast<std::size_t>(y) * width + x] != 0; }
};

// Index of the center minimizing weight * distance; ties go to the lowest index.
int assignTile(double px, double py, std::span<const TileCenter> centers);

// Brute-force raster: cell (i,j) is assigned at its center point (i+0.5, j+0.5).
TileGrid rasterize(std::span<const TileCenter> centers, int width, int height);

// A cell is passable iff at least one 4-neighbor holds a different tile index.
PathNetwork extractPathNetwork(const TileGrid& grid);

enum class CenterMode { Random, Grid, GridPlusRandom };

struct CenterSpec {
    CenterMode mode = CenterMode::Random;
    int count = 100;     // n for Random, k for Grid / GridPlusRandom
    int extra = 0;       // m extra random points for GridPlusRandom
    double jitter = 0.1; // weights drawn uniformly from [1-jitter, 1+jitter]; 0 = equal weights
};

std::vector<TileCenter> generateCenters(const CenterSpec& spec, int width, int height,
                                        std::uint64_t seed);

// True when every passable cell is reachable from every other via 4-neighbor
// steps. An empty passable set counts as connected.
bool isFourConnected(const PathNetwork& net);

// Tiles in distinct colors, path cells black. Pass nullptr to skip the overlay.
Image renderTiles(const TileGrid& grid, const PathNetwork* net);

} // namespace richspaces
