#include "tchebi/ssim.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace tchebi {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;

std::array<double, kWindow> gaussian_window() {
    std::array<double, kWindow> g{};
    double sum = 0.0;
    for (int i = 0; i < kWindow; ++i) {
        const double d = i - (kWindow - 1) / 2.0;
        g[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
        sum += g[i];
    }
    for (double& v : g) v /= sum;
    return g;
}

// Separable valid-mode filter: output is (h - 10) x (w - 10).
std::vector<double> filter_valid(const std::vector<double>& img, int h, int w, int& oh, int& ow) {
    static const std::array<double, kWindow> g = gaussian_window();
    ow = w - kWindow + 1;
    oh = h - kWindow + 1;
    std::vector<double> rows(static_cast<size_t>(h) * ow);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < ow; ++j) {
            double s = 0.0;
            for (int t = 0; t < kWindow; ++t) s += g[t] * img[static_cast<size_t>(i) * w + j + t];
            rows[static_cast<size_t>(i) * ow + j] = s;
        }
    std::vector<double> out(static_cast<size_t>(oh) * ow);
    for (int i = 0; i < oh; ++i)
        for (int j = 0; j < ow; ++j) {
            double s = 0.0;
            for (int t = 0; t < kWindow; ++t) s += g[t] * rows[static_cast<size_t>(i + t) * ow + j];
            out[static_cast<size_t>(i) * ow + j] = s;
        }
    return out;
}

}  // namespace

double ssim(const GrayImage& reference, const GrayImage& test) {
    if (reference.width != test.width || reference.height != test.height)
        throw std::domain_error("ssim: image sizes differ");
    if (reference.width < kWindow || reference.height < kWindow)
        throw std::domain_error("ssim: image smaller than the filter window");

    const int h = reference.height, w = reference.width;
    const size_t count = static_cast<size_t>(h) * w;
    std::vector<double> x(count), y(count), xx(count), yy(count), xy(count);
    for (size_t i = 0; i < count; ++i) {
        x[i] = reference.pixels[i];
        y[i] = test.pixels[i];
        xx[i] = x[i] * x[i];
        yy[i] = y[i] * y[i];
        xy[i] = x[i] * y[i];
    }

    int oh = 0, ow = 0;
    const std::vector<double> mx = filter_valid(x, h, w, oh, ow);
    const std::vector<double> my = filter_valid(y, h, w, oh, ow);
    const std::vector<double> mxx = filter_valid(xx, h, w, oh, ow);
    const std::vector<double> myy = filter_valid(yy, h, w, oh, ow);
    const std::vector<double> mxy = filter_valid(xy, h, w, oh, ow);

    constexpr double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double c2 = (0.03 * 255.0) * (0.03 * 255.0);
    double sum = 0.0;
    const size_t n = static_cast<size_t>(oh) * ow;
    for (size_t i = 0; i < n; ++i) {
        const double vx = mxx[i] - mx[i] * mx[i];
        const double vy = myy[i] - my[i] * my[i];
        const double cov = mxy[i] - mx[i] * my[i];
        sum += ((2.0 * mx[i] * my[i] + c1) * (2.0 * cov + c2)) /
               ((mx[i] * mx[i] + my[i] * my[i] + c1) * (vx + vy + c2));
    }
    return sum / static_cast<double>(n);
}

}  // namespace tchebi
