#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace richspaces {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

class Image {
public:
    Image(int width, int height, Rgb fill = Rgb{255, 255, 255});

    int width() const { return width_; }
    int height() const { return height_; }

    Rgb& at(int x, int y) { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
    const Rgb& at(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }

    // Clips to the image bounds.
    void fillRect(int x, int y, int w, int h, Rgb c);

    const std::vector<Rgb>& pixels() const { return pixels_; }

private:
    int width_;
    int height_;
    std::vector<Rgb> pixels_;
};

// Plain-text PPM (P3).
void writePpm(const Image& img, const std::string& path);
Image readPpm(const std::string& path);

} // namespace richspaces
