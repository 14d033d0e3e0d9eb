#include "tchebi/dtt.hpp"

#include <cmath>
#include <numbers>

namespace tchebi {

namespace {

constexpr int kMaxSize = 64;

void check_size(int size) {
    if (size < 1) throw std::domain_error("size must be positive");
    if (size > kMaxSize) throw std::domain_error("size above supported maximum of 64");
}

}  // namespace

double tcheb_poly(int k, int n, int size) {
    check_size(size);
    if (k < 0 || k >= size || n < 0 || n >= size)
        throw std::domain_error("tcheb_poly: order or sample out of range");
    const double t1 = 2.0 * n - size + 1.0;
    double prev2 = 1.0;  // t_0[n]
    if (k == 0) return prev2;
    double prev1 = t1;
    for (int j = 2; j <= k; ++j) {
        // The recursion over rationals yields integers; snapping each step
        // removes the round-off from the non-dyadic coefficients (identity
        // once values pass 2^53).
        const double next = std::nearbyint(
            ((2.0 * j - 1.0) / j) * t1 * prev1 -
            ((j - 1.0) / j) * (static_cast<double>(size) * size - (j - 1.0) * (j - 1.0)) * prev2);
        prev2 = prev1;
        prev1 = next;
    }
    return prev1;
}

double poly_norm_sq(int k, int size) {
    check_size(size);
    if (k < 0 || k >= size) throw std::domain_error("poly_norm_sq: order out of range");
    // (N+k)! / (N-k-1)! is the product of the 2k+1 integers N-k .. N+k.
    double p = 1.0;
    for (int j = size - k; j <= size + k; ++j) p *= j;
    return p / (2 * k + 1);
}

Mat tchebichef_basis(int size) {
    check_size(size);
    Mat t(size, size);
    for (int n = 0; n < size; ++n) {
        t(0, n) = 1.0;
        if (size > 1) t(1, n) = 2.0 * n - size + 1.0;
    }
    for (int k = 2; k < size; ++k)
        for (int n = 0; n < size; ++n)
            t(k, n) = std::nearbyint(
                ((2.0 * k - 1.0) / k) * t(1, n) * t(k - 1, n) -
                ((k - 1.0) / k) * (static_cast<double>(size) * size - (k - 1.0) * (k - 1.0)) * t(k - 2, n));
    return t;
}

Mat dtt_matrix(int size) {
    Mat t = tchebichef_basis(size);
    for (int k = 0; k < size; ++k) {
        const double scale = 1.0 / std::sqrt(poly_norm_sq(k, size));
        for (int n = 0; n < size; ++n) t(k, n) *= scale;
    }
    return t;
}

Mat dct_matrix(int size) {
    check_size(size);
    Mat c(size, size);
    for (int k = 0; k < size; ++k) {
        const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / size);
        for (int n = 0; n < size; ++n)
            c(k, n) = scale * std::cos(std::numbers::pi * (2.0 * n + 1.0) * k / (2.0 * size));
    }
    return c;
}

}  // namespace tchebi
