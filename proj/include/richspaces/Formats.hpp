#pragma once

#include "richspaces/FashionCa.hpp"
#include "richspaces/Geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace richspaces {

// Shared 0/1 mask format used for path networks and cavern maps:
//   richspaces-mask 1
//   <width> <height>
//   one row per line, '1' = passable
void writeMaskFile(int width, int height, std::span<const std::uint8_t> mask,
                   const std::string& path);

struct Mask {
    int width = 0, height = 0;
    std::vector<std::uint8_t> cells;
};

Mask readMaskFile(const std::string& path);

void writeNetworkFile(const PathNetwork& net, const std::string& path);
PathNetwork readNetworkFile(const std::string& path);

void writeCavernFile(const CavernMap& map, const std::string& path);

// Key/value report:
//   richspaces-report 1
//   <key> <value>
void writeReportFile(const std::vector<std::pair<std::string, std::string>>& fields,
                     const std::string& path);
std::vector<std::pair<std::string, std::string>> readReportFile(const std::string& path);

void writeTextFile(const std::string& text, const std::string& path);
std::string readTextFile(const std::string& path);

} // namespace richspaces
