#include "tchebi/approx.hpp"

#include <cmath>
#include <numeric>

#include "tchebi/dtt.hpp"

namespace tchebi {

double round_half_away(double x) {
    if (!std::isfinite(x)) throw std::domain_error("round_half_away: non-finite input");
    return x < 0.0 ? -std::floor(-x + 0.5) : std::floor(x + 0.5);
}

int round_half_away_int(double x) { return static_cast<int>(round_half_away(x)); }

std::vector<double> row_normalizer(int size) {
    if (size != 4 && size != 8) throw std::domain_error("row_normalizer: size must be 4 or 8");
    const Mat t = dtt_matrix(size);
    std::vector<double> d(size);
    for (int k = 0; k < size; ++k) {
        double m = 0.0;
        for (int n = 0; n < size; ++n) m = std::max(m, std::abs(t(k, n)));
        d[k] = 1.0 / m;
    }
    return d;
}

IMat raw_parametric_matrix(int size, double alpha) {
    if (!(alpha > 0.0 && alpha < 2.5))
        throw std::domain_error("parametric matrix: alpha must lie in (0, 5/2)");
    if (size != 4 && size != 8)
        throw std::domain_error("parametric matrix: size must be 4 or 8");
    // The normalized rows diag(row_normalizer) * dtt_matrix are exactly the
    // integer polynomial rows divided by their peak magnitude (the orthonormal
    // scaling cancels). The recursion output is integral up to round-off, so
    // snap to integers and form the ratio directly: peak-magnitude entries
    // become exactly +-1 and grid points landing on rational rounding
    // boundaries resolve consistently closed-open instead of by round-off
    // luck.
    const Mat basis = tchebichef_basis(size);
    IMat m(size, size);
    for (int k = 0; k < size; ++k) {
        long long peak = 0;
        for (int n = 0; n < size; ++n)
            peak = std::max(peak, std::llabs(std::llround(basis(k, n))));
        for (int n = 0; n < size; ++n) {
            const double ratio = static_cast<double>(std::llround(basis(k, n))) /
                                 static_cast<double>(peak);
            m(k, n) = round_half_away_int(alpha * ratio);
        }
    }
    return m;
}

IMat parametric_matrix(int size, double alpha) {
    IMat m = raw_parametric_matrix(size, alpha);
    for (int k = 0; k < size; ++k) {
        int g = 0;
        for (int n = 0; n < size; ++n) g = std::gcd(g, std::abs(m(k, n)));
        if (g > 1)
            for (int n = 0; n < size; ++n) m(k, n) /= g;
    }
    return m;
}

bool has_zero_row(const IMat& m) {
    for (int i = 0; i < m.rows(); ++i) {
        bool all_zero = true;
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) { all_zero = false; break; }
        if (all_zero) return true;
    }
    return false;
}

std::vector<double> scaling_diagonal(const IMat& core) {
    std::vector<double> s(core.rows());
    for (int i = 0; i < core.rows(); ++i) {
        long long sum = 0;
        for (int j = 0; j < core.cols(); ++j)
            sum += static_cast<long long>(core(i, j)) * core(i, j);
        if (sum == 0) throw std::domain_error("scaling_diagonal: degenerate matrix with zero row");
        s[i] = 1.0 / std::sqrt(static_cast<double>(sum));
    }
    return s;
}

bool orthogonality_check(const IMat& m) {
    const IMat gram = m * transpose(m);
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j)
            if (i != j && gram(i, j) != 0) return false;
    return true;
}

Mat ScaledApproximation::dense() const {
    Mat d = to_mat(core);
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) d(i, j) *= scaling[i];
    return d;
}

ScaledApproximation make_scaled_approximation(IMat core) {
    std::vector<double> s = scaling_diagonal(core);
    return ScaledApproximation{std::move(core), std::move(s)};
}

IMat low_complexity_8() { return parametric_matrix(8, 2.0); }
IMat low_complexity_4() { return parametric_matrix(4, 2.0); }
ScaledApproximation approx_dtt_8() { return make_scaled_approximation(low_complexity_8()); }
ScaledApproximation approx_dtt_4() { return make_scaled_approximation(low_complexity_4()); }

const FastAlgorithm8& fast_algorithm_8() {
    static const FastAlgorithm8 alg = [] {
        FastAlgorithm8 a;
        a.butterfly = IMat{{1, 0, 0, 0, 0, 0, 0, 1},
                           {0, 1, 0, 0, 0, 0, 1, 0},
                           {0, 0, 1, 0, 0, 1, 0, 0},
                           {0, 0, 0, 1, 1, 0, 0, 0},
                           {0, 0, 0, 1, -1, 0, 0, 0},
                           {0, 0, 1, 0, 0, -1, 0, 0},
                           {0, 1, 0, 0, 0, 0, -1, 0},
                           {1, 0, 0, 0, 0, 0, 0, -1}};
        a.shift_add_1 = IMat{{0, 0, 1, 0, 0, 0, 0, 0},
                             {1, 0, 0, 1, 0, 0, 0, 0},
                             {0, 1, 0, 0, 0, 0, 0, 0},
                             {0, -1, 2, -1, 0, 0, 0, 0},
                             {2, 0, -1, -1, 0, 0, 0, 0},
                             {0, 0, 0, 0, 2, -1, 0, 0},
                             {0, 0, 0, 0, 1, 1, 0, 0},
                             {0, 0, 0, 0, 0, 1, 1, 0},
                             {0, 0, 0, 0, 0, 0, 2, -1},
                             {0, 0, 0, 0, 0, 0, 0, -2}};
        a.shift_add_2 = IMat{{1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
                             {0, 1, -2, 0, 0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
                             {0, 0, 0, 0, 0, 0, 0, -1, 0, 1},
                             {0, 0, 0, 0, 0, 0, -1, 0, 1, 0}};
        a.permutation = IMat(8, 8);
        constexpr int kOutCol[8] = {0, 6, 3, 5, 1, 7, 2, 4};
        for (int r = 0; r < 8; ++r) a.permutation(r, kOutCol[r]) = 1;
        a.counts = count_operations(a);
        return a;
    }();
    return alg;
}

OperationCounts count_matrix_operations(const IMat& m) {
    OperationCounts c;
    for (int i = 0; i < m.rows(); ++i) {
        int nonzero = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            ++nonzero;
            if (std::abs(m(i, j)) == 2) ++c.shifts;
        }
        if (nonzero > 1) c.additions += nonzero - 1;
    }
    return c;
}

OperationCounts count_operations(const FastAlgorithm8& alg) {
    OperationCounts total;
    for (const IMat* stage : {&alg.butterfly, &alg.shift_add_1, &alg.shift_add_2}) {
        const OperationCounts c = count_matrix_operations(*stage);
        total.additions += c.additions;
        total.shifts += c.shifts;
    }
    return total;
}

namespace {

// Staged evaluation shared by the double and integer paths. 8 butterfly
// additions, then 9 + 7 additions and 5 + 1 doublings across the two
// shift-add layers; the permutation is wiring.
template <typename T>
std::array<T, 8> fast_forward_8_impl(const std::array<T, 8>& x) {
    const T u0 = x[0] + x[7];
    const T u1 = x[1] + x[6];
    const T u2 = x[2] + x[5];
    const T u3 = x[3] + x[4];
    const T u4 = x[3] - x[4];
    const T u5 = x[2] - x[5];
    const T u6 = x[1] - x[6];
    const T u7 = x[0] - x[7];

    const T v0 = u2;
    const T v1 = u0 + u3;
    const T v2 = u1;
    const T v3 = 2 * u2 - u1 - u3;
    const T v4 = 2 * u0 - u2 - u3;
    const T v5 = 2 * u4 - u5;
    const T v6 = u4 + u5;
    const T v7 = u5 + u6;
    const T v8 = 2 * u6 - u7;
    const T v9 = -(2 * u7);

    const T w0 = v0 + v1 + v2;
    const T w1 = v1 - 2 * v2;
    const T w2 = v3;
    const T w3 = v4;
    const T w4 = v5;
    const T w5 = v6 + v7 + v9;
    const T w6 = v9 - v7;
    const T w7 = v8 - v6;

    return {w0, w6, w3, w5, w1, w7, w2, w4};
}

}  // namespace

std::array<double, 8> fast_forward_8(const std::array<double, 8>& x) {
    return fast_forward_8_impl(x);
}

std::array<int64_t, 8> fast_forward_8(const std::array<int64_t, 8>& x) {
    return fast_forward_8_impl(x);
}

std::array<double, 8> near_inverse_8(const std::array<double, 8>& x) {
    static const std::vector<double> scale = scaling_diagonal(low_complexity_8());

    // Transposed flow graph: undo the permutation, then run the stages with
    // arrows reversed (each stage matrix transposed).
    std::array<double, 8> w{};
    constexpr int kOutCol[8] = {0, 6, 3, 5, 1, 7, 2, 4};
    for (int r = 0; r < 8; ++r) w[kOutCol[r]] = scale[r] * x[r];

    std::array<double, 10> v{};
    v[0] = w[0];
    v[1] = w[0] + w[1];
    v[2] = w[0] - 2 * w[1];
    v[3] = w[2];
    v[4] = w[3];
    v[5] = w[4];
    v[6] = w[5] - w[7];
    v[7] = w[5] - w[6];
    v[8] = w[7];
    v[9] = w[5] + w[6];

    std::array<double, 8> u{};
    u[0] = v[1] + 2 * v[4];
    u[1] = v[2] - v[3];
    u[2] = v[0] + 2 * v[3] - v[4];
    u[3] = v[1] - v[3] - v[4];
    u[4] = 2 * v[5] + v[6];
    u[5] = v[6] + v[7] - v[5];
    u[6] = v[7] + 2 * v[8];
    u[7] = -v[8] - 2 * v[9];

    return {u[0] + u[7], u[1] + u[6], u[2] + u[5], u[3] + u[4],
            u[3] - u[4], u[2] - u[5], u[1] - u[6], u[0] - u[7]};
}

Mat near_inverse_matrix(const ScaledApproximation& t, NearInversePolicy policy) {
    const Mat core_t = transpose(to_mat(t.core));
    const int n = t.size();
    switch (policy) {
        case NearInversePolicy::kTransposeReuse:
            return transpose(t.dense());
        case NearInversePolicy::kEdiagCorrection: {
            const IMat gram = t.core * transpose(t.core);
            Mat m = core_t;
            for (int j = 0; j < n; ++j) {
                const double f = 1.0 / (gram(j, j) * t.scaling[j]);
                for (int i = 0; i < n; ++i) m(i, j) *= f;
            }
            return m;
        }
        case NearInversePolicy::kPrintedDiagonal: {
            if (n != 8)
                throw std::domain_error("near_inverse_matrix: printed diagonal is 8-point only");
            constexpr double kDiag[8] = {8.0, 3.0, 3.0, 5.0, 3.0, 3.5, 3.0, 2.5};
            Mat m = core_t;
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) m(i, j) /= kDiag[j];
            return m;
        }
    }
    throw std::invalid_argument("near_inverse_matrix: unknown policy");
}

double fast_forward_8_value_bound(double input_bound) {
    const FastAlgorithm8& alg = fast_algorithm_8();
    std::vector<double> bound(8, input_bound);
    double peak = input_bound;
    for (const IMat* stage : {&alg.butterfly, &alg.shift_add_1, &alg.shift_add_2, &alg.permutation}) {
        std::vector<double> next(stage->rows(), 0.0);
        for (int i = 0; i < stage->rows(); ++i) {
            for (int j = 0; j < stage->cols(); ++j)
                next[i] += std::abs((*stage)(i, j)) * bound[j];
            peak = std::max(peak, next[i]);
        }
        bound = std::move(next);
    }
    return peak;
}

}  // namespace tchebi
