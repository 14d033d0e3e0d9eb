#include "tchebi/image.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tchebi/approx.hpp"

namespace tchebi {

GrayImage make_image(int width, int height) {
    if (width <= 0 || height <= 0) throw std::domain_error("image dimensions must be positive");
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(static_cast<size_t>(width) * height, 0);
    return img;
}

namespace {

int read_pnm_token(std::istream& in) {
    // Skips whitespace and '#' comments per the PNM grammar.
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF) throw std::runtime_error("pgm: truncated header");
    int value = 0;
    bool any = false;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        any = true;
        c = in.get();
    }
    if (!any) throw std::runtime_error("pgm: malformed header");
    return value;
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    char magic[2];
    f.read(magic, 2);
    if (!f || magic[0] != 'P' || magic[1] != '5')
        throw std::runtime_error("pgm: not a binary P5 file: " + path);
    const int width = read_pnm_token(f);
    const int height = read_pnm_token(f);
    const int maxval = read_pnm_token(f);
    if (maxval != 255) throw std::runtime_error("pgm: only maxval 255 supported: " + path);
    GrayImage img = make_image(width, height);
    f.read(reinterpret_cast<char*>(img.pixels.data()),
           static_cast<std::streamsize>(img.pixels.size()));
    if (!f) throw std::runtime_error("pgm: truncated pixel data: " + path);
    return img;
}

void write_pgm(const std::string& path, const GrayImage& img) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "P5\n" << img.width << " " << img.height << "\n255\n";
    f.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (!f) throw std::runtime_error("pgm: write failed: " + path);
}

namespace {

uint8_t clamp_pixel(double v) {
    const double r = round_half_away(v);
    if (r < 0.0) return 0;
    if (r > 255.0) return 255;
    return static_cast<uint8_t>(r);
}

}  // namespace

GrayImage test_image_gradient(int size) {
    GrayImage img = make_image(size, size);
    const double c = size / 2.0;
    const double rmax = std::sqrt(2.0) * c;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            const double r = std::hypot(i - c, j - c);
            img.at(i, j) = clamp_pixel(255.0 * (1.0 - r / rmax));
        }
    return img;
}

GrayImage test_image_zoneplate(int size) {
    // Instantaneous frequency grows linearly with radius, peaking at 0.06
    // cycles/sample in the corners; gentle enough that the quantization sweep
    // dominates the quality curve.
    constexpr double kMaxFrequency = 0.06;
    GrayImage img = make_image(size, size);
    const double c = size / 2.0;
    const double rmax = std::sqrt(2.0) * c;
    const double k = std::numbers::pi * kMaxFrequency / rmax;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            const double r2 = (i - c) * (i - c) + (j - c) * (j - c);
            img.at(i, j) = clamp_pixel(255.0 * (0.5 + 0.5 * std::cos(k * r2 / 2.0)));
        }
    return img;
}

GrayImage test_image_noise(int size) {
    GrayImage img = make_image(size, size);
    std::mt19937 rng(20240u);
    // Mid-amplitude uniform noise; raw engine output mapped directly so the
    // image is bit-reproducible across standard library implementations.
    for (auto& p : img.pixels) p = static_cast<uint8_t>(96 + rng() % 65);
    return img;
}

std::vector<std::pair<std::string, GrayImage>> bundled_corpus(int size) {
    std::vector<std::pair<std::string, GrayImage>> corpus;
    corpus.emplace_back("gradient", test_image_gradient(size));
    corpus.emplace_back("zoneplate", test_image_zoneplate(size));
    corpus.emplace_back("noise", test_image_noise(size));
    return corpus;
}

}  // namespace tchebi
