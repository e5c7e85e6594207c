#include "richspaces/Image.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace richspaces {

Image::Image(int width, int height, Rgb fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1) throw std::invalid_argument("image dimensions must be positive");
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

void Image::fillRect(int x, int y, int w, int h, Rgb c) {
    const int x0 = std::max(0, x);
    const int y0 = std::max(0, y);
    const int x1 = std::min(width_, x + w);
    const int y1 = std::min(height_, y + h);
    for (int yy = y0; yy < y1; ++yy)
        for (int xx = x0; xx < x1; ++xx)
            at(xx, yy) = c;
}

void writePpm(const Image& img, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "P3\n" << img.width() << " " << img.height() << "\n255\n";
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            const Rgb& p = img.at(x, y);
            out << int(p.r) << ' ' << int(p.g) << ' ' << int(p.b);
            out << (x + 1 == img.width() ? '\n' : ' ');
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Image readPpm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string magic;
    in >> magic;
    if (magic != "P3") throw std::runtime_error("not a plain PPM (P3): " + path);
    int w = 0, h = 0, maxval = 0;
    in >> w >> h >> maxval;
    if (!in || w < 1 || h < 1) throw std::runtime_error("bad PPM header: " + path);
    if (maxval != 255) throw std::runtime_error("unsupported PPM max value: " + path);
    Image img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int r, g, b;
            in >> r >> g >> b;
            if (!in) throw std::runtime_error("truncated PPM pixel data: " + path);
            if (r < 0 || r > 255 || g < 0 || g > 255 || b < 0 || b > 255)
                throw std::runtime_error("PPM pixel out of range: " + path);
            img.at(x, y) = Rgb{std::uint8_t(r), std::uint8_t(g), std::uint8_t(b)};
        }
    }
    int extra;
    if (in >> extra) throw std::runtime_error("trailing data in PPM: " + path);
    return img;
}

} // namespace richspaces
