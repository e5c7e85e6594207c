#include "richspaces/Formats.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace richspaces {

void writeMaskFile(int width, int height, std::span<const std::uint8_t> mask,
                   const std::string& path) {
    if (mask.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("mask shape mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "richspaces-mask 1\n" << width << ' ' << height << '\n';
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x)
            out << (mask[static_cast<std::size_t>(y) * width + x] ? '1' : '0');
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Mask readMaskFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string magic;
    int version;
    if (!(in >> magic >> version) || magic != "richspaces-mask" || version != 1)
        throw std::runtime_error("not a mask file: " + path);
    Mask mask;
    if (!(in >> mask.width >> mask.height) || mask.width < 1 || mask.height < 1)
        throw std::runtime_error("bad mask dimensions: " + path);
    mask.cells.reserve(static_cast<std::size_t>(mask.width) * mask.height);
    std::string row;
    for (int y = 0; y < mask.height; ++y) {
        if (!(in >> row) || row.size() != static_cast<std::size_t>(mask.width))
            throw std::runtime_error("bad mask row: " + path);
        for (char c : row) {
            if (c != '0' && c != '1') throw std::runtime_error("bad mask cell: " + path);
            mask.cells.push_back(c == '1' ? 1 : 0);
        }
    }
    return mask;
}

void writeNetworkFile(const PathNetwork& net, const std::string& path) {
    writeMaskFile(net.width, net.height, net.passable, path);
}

PathNetwork readNetworkFile(const std::string& path) {
    Mask mask = readMaskFile(path);
    PathNetwork net;
    net.width = mask.width;
    net.height = mask.height;
    net.passable = std::move(mask.cells);
    return net;
}

void writeCavernFile(const CavernMap& map, const std::string& path) {
    writeMaskFile(map.width, map.height, map.passable, path);
}

void writeReportFile(const std::vector<std::pair<std::string, std::string>>& fields,
                     const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "richspaces-report 1\n";
    for (const auto& [key, value] : fields) out << key << ' ' << value << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::pair<std::string, std::string>> readReportFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string header;
    std::getline(in, header);
    if (header != "richspaces-report 1") throw std::runtime_error("not a report file: " + path);
    std::vector<std::pair<std::string, std::string>> fields;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t space = line.find(' ');
        if (space == std::string::npos) throw std::runtime_error("bad report line: " + path);
        fields.emplace_back(line.substr(0, space), line.substr(space + 1));
    }
    return fields;
}

void writeTextFile(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string readTextFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace richspaces
