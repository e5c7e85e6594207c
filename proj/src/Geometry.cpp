#include "richspaces/Geometry.hpp"

#include "richspaces/Random.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace richspaces {

int assignTile(double px, double py, std::span<const TileCenter> centers) {
    if (centers.empty()) throw std::invalid_argument("no centers");
    int best = 0;
    double bestCost = -1.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const TileCenter& c = centers[i];
        const double dx = px - c.x;
        const double dy = py - c.y;
        // weight^2 * dist^2 preserves the argmin and the lowest-index tie rule.
        const double cost = c.weight * c.weight * (dx * dx + dy * dy);
        if (bestCost < 0.0 || cost < bestCost) {
            bestCost = cost;
            best = static_cast<int>(i);
        }
    }
    return best;
}

TileGrid rasterize(std::span<const TileCenter> centers, int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("raster dimensions must be positive");
    if (centers.empty()) throw std::invalid_argument("no centers");
    TileGrid grid;
    grid.width = width;
    grid.height = height;
    grid.cells.resize(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            grid.cells[static_cast<std::size_t>(y) * width + x] =
                assignTile(x + 0.5, y + 0.5, centers);
    return grid;
}

PathNetwork extractPathNetwork(const TileGrid& grid) {
    PathNetwork net;
    net.width = grid.width;
    net.height = grid.height;
    net.passable.assign(static_cast<std::size_t>(grid.width) * grid.height, 0);
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            const int t = grid.at(x, y);
            const bool boundary =
                (x > 0 && grid.at(x - 1, y) != t) ||
                (x + 1 < grid.width && grid.at(x + 1, y) != t) ||
                (y > 0 && grid.at(x, y - 1) != t) ||
                (y + 1 < grid.height && grid.at(x, y + 1) != t);
            if (boundary) net.passable[static_cast<std::size_t>(y) * grid.width + x] = 1;
        }
    }
    return net;
}

namespace {

double jitteredWeight(double jitter, Rng& rng) {
    if (jitter <= 0.0) return 1.0;
    return rng.real(1.0 - jitter, 1.0 + jitter);
}

std::vector<TileCenter> gridLattice(int k, int width, int height, double jitter, Rng& rng) {
    // Regular k x k lattice inset by half a lattice spacing.
    std::vector<TileCenter> centers;
    centers.reserve(static_cast<std::size_t>(k) * k);
    const double sx = static_cast<double>(width) / k;
    const double sy = static_cast<double>(height) / k;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            centers.push_back(TileCenter{(i + 0.5) * sx, (j + 0.5) * sy, jitteredWeight(jitter, rng)});
    return centers;
}

void appendRandom(std::vector<TileCenter>& centers, int n, int width, int height, double jitter,
                  Rng& rng) {
    for (int i = 0; i < n; ++i) {
        const double x = rng.real(0.0, static_cast<double>(width));
        const double y = rng.real(0.0, static_cast<double>(height));
        centers.push_back(TileCenter{x, y, jitteredWeight(jitter, rng)});
    }
}

} // namespace

std::vector<TileCenter> generateCenters(const CenterSpec& spec, int width, int height,
                                        std::uint64_t seed) {
    if (spec.count < 1) throw std::invalid_argument("center count must be positive");
    if (spec.mode == CenterMode::GridPlusRandom && spec.extra < 1)
        throw std::invalid_argument("extra center count must be positive");
    if (spec.jitter < 0.0 || spec.jitter >= 1.0)
        throw std::invalid_argument("jitter must be in [0, 1)");
    Rng rng(seed);
    switch (spec.mode) {
        case CenterMode::Random: {
            std::vector<TileCenter> centers;
            centers.reserve(spec.count);
            appendRandom(centers, spec.count, width, height, spec.jitter, rng);
            return centers;
        }
        case CenterMode::Grid:
            return gridLattice(spec.count, width, height, spec.jitter, rng);
        case CenterMode::GridPlusRandom: {
            auto centers = gridLattice(spec.count, width, height, spec.jitter, rng);
            appendRandom(centers, spec.extra, width, height, spec.jitter, rng);
            return centers;
        }
    }
    throw std::logic_error("unknown center mode");
}

bool isFourConnected(const PathNetwork& net) {
    const std::size_t total = net.passable.size();
    std::size_t start = total;
    std::size_t passableCount = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (net.passable[i]) {
            ++passableCount;
            if (start == total) start = i;
        }
    }
    if (passableCount <= 1) return true;

    std::vector<std::uint8_t> seen(total, 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        ++reached;
        const int x = static_cast<int>(i % net.width);
        const int y = static_cast<int>(i / net.width);
        const int nx[4] = {x - 1, x + 1, x, x};
        const int ny[4] = {y, y, y - 1, y + 1};
        for (int d = 0; d < 4; ++d) {
            if (nx[d] < 0 || nx[d] >= net.width || ny[d] < 0 || ny[d] >= net.height) continue;
            const std::size_t j = static_cast<std::size_t>(ny[d]) * net.width + nx[d];
            if (net.passable[j] && !seen[j]) {
                seen[j] = 1;
                stack.push_back(j);
            }
        }
    }
    return reached == passableCount;
}

Image renderTiles(const TileGrid& grid, const PathNetwork* net) {
    Image img(grid.width, grid.height);
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            const std::uint32_t t = static_cast<std::uint32_t>(grid.at(x, y));
            // Scrambled tile index -> stable pastel color.
            std::uint32_t h = t * 2654435761u;
            img.at(x, y) = Rgb{std::uint8_t(128 + (h & 0x7f)), std::uint8_t(128 + ((h >> 8) & 0x7f)),
                               std::uint8_t(128 + ((h >> 16) & 0x7f))};
        }
    }
    if (net) {
        for (int y = 0; y < grid.height; ++y)
            for (int x = 0; x < grid.width; ++x)
                if (net->at(x, y)) img.at(x, y) = Rgb{0, 0, 0};
    }
    return img;
}

} // namespace richspaces
