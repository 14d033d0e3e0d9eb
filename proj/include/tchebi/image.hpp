#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tchebi {

// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;

    uint8_t at(int row, int col) const { return pixels[static_cast<size_t>(row) * width + col]; }
    uint8_t& at(int row, int col) { return pixels[static_cast<size_t>(row) * width + col]; }
};

GrayImage make_image(int width, int height);

// Binary PGM (P5), maxval 255.
GrayImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const GrayImage& img);

// Bundled synthetic test images (512x512): a radial luminance ramp, a low
// frequency zone plate, and fixed-seed uniform noise.
GrayImage test_image_gradient(int size = 512);
GrayImage test_image_zoneplate(int size = 512);
GrayImage test_image_noise(int size = 512);

// The three test images above, in a stable order with stable names.
std::vector<std::pair<std::string, GrayImage>> bundled_corpus(int size = 512);

}  // namespace tchebi
