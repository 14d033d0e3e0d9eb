#include "tchebi/metrics.hpp"

#include <cmath>
#include <numbers>

#include "tchebi/approx.hpp"
#include "tchebi/dtt.hpp"
#include "tchebi/io.hpp"

namespace tchebi {

Mat markov_covariance(int size, double corr) {
    if (size < 1) throw std::domain_error("markov_covariance: size must be positive");
    if (!(corr > 0.0 && corr < 1.0))
        throw std::domain_error("markov_covariance: correlation must lie in (0, 1)");
    Mat r(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) r(i, j) = std::pow(corr, std::abs(i - j));
    return r;
}

Mat transformed_covariance(const Mat& h, double corr) {
    if (h.rows() != h.cols()) throw std::domain_error("transformed_covariance: matrix not square");
    return h * markov_covariance(h.rows(), corr) * inverse(h);
}

double coding_gain(const Mat& h, double corr) {
    const int n = h.rows();
    const Mat g = inverse(h);
    const Mat ry = h * markov_covariance(n, corr) * g;
    double log_sum = 0.0;
    for (int k = 0; k < n; ++k) {
        double synth = 0.0;
        for (int j = 0; j < n; ++j) synth += g(k, j) * g(k, j);
        log_sum += std::log10(ry(k, k) * synth);
    }
    return -10.0 * log_sum / n;
}

double transform_efficiency(const Mat& h, double corr) {
    const Mat ry = transformed_covariance(h, corr);
    double diag = 0.0, all = 0.0;
    for (int i = 0; i < ry.rows(); ++i)
        for (int j = 0; j < ry.cols(); ++j) {
            const double v = std::abs(ry(i, j));
            all += v;
            if (i == j) diag += v;
        }
    return 100.0 * diag / all;
}

namespace {

void check_same_size(const Mat& a, const Mat& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::domain_error(std::string(what) + ": size mismatch");
}

}  // namespace

double mse_similarity(const Mat& exact, const Mat& approx, double corr) {
    check_same_size(exact, approx, "mse_similarity");
    const int n = exact.rows();
    const Mat d = exact - approx;
    const Mat m = d * markov_covariance(n, corr) * transpose(d);
    double tr = 0.0;
    for (int k = 0; k < n; ++k) tr += m(k, k);
    return tr / n;
}

double total_energy_error(const Mat& exact, const Mat& approx) {
    check_same_size(exact, approx, "total_energy_error");
    const double f = frobenius_norm(exact - approx);
    return std::numbers::pi * f * f;
}

double transform_distortion(const Mat& exact, const Mat& approx) {
    check_same_size(exact, approx, "transform_distortion");
    const int n = exact.rows();
    const Mat p = exact * transpose(approx);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += p(k, k) * p(k, k);
    return (1.0 - sum / n) * 100.0;
}

double deviation_from_diagonality(const Mat& a) {
    if (a.rows() != a.cols()) throw std::domain_error("deviation_from_diagonality: not square");
    double diag_sq = 0.0, all_sq = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const double v = a(i, j) * a(i, j);
            all_sq += v;
            if (i == j) diag_sq += v;
        }
    if (all_sq == 0.0) throw std::domain_error("deviation_from_diagonality: zero matrix");
    return 1.0 - std::sqrt(diag_sq) / std::sqrt(all_sq);
}

double deviation_from_diagonality(const IMat& a) { return deviation_from_diagonality(to_mat(a)); }

double quasi_orthogonality_threshold() { return 1.0 - 2.0 / std::sqrt(5.0); }

MetricsReport metrics_report(const std::string& kind, int size, double corr) {
    MetricsReport r;
    if (kind == "exact-dtt" || kind == "exact-dct") {
        const Mat t = kind == "exact-dtt" ? dtt_matrix(size) : dct_matrix(size);
        r.coding_gain_db = coding_gain(t, corr);
        r.transform_efficiency = tchebi::transform_efficiency(t, corr);
        return r;
    }
    if (kind == "approx") {
        const ScaledApproximation a = make_scaled_approximation(parametric_matrix(size, 2.0));
        const Mat dense = a.dense();
        const Mat exact = dtt_matrix(size);
        r.coding_gain_db = coding_gain(dense, corr);
        r.transform_efficiency = tchebi::transform_efficiency(dense, corr);
        r.mse = mse_similarity(exact, dense, corr);
        r.total_energy_error = tchebi::total_energy_error(exact, dense);
        r.transform_distortion_pct = transform_distortion(exact, dense);
        r.deviation_from_diagonality =
            tchebi::deviation_from_diagonality(a.core * transpose(a.core));
        return r;
    }
    throw std::domain_error("metrics_report: unknown kind " + kind);
}

std::string metrics_report_json(const MetricsReport& r, int precision) {
    std::string out = "{";
    out += "\"coding_gain_db\":" + format_double(r.coding_gain_db, precision);
    out += ",\"transform_efficiency\":" + format_double(r.transform_efficiency, precision);
    out += ",\"mse\":" + format_double(r.mse, precision);
    out += ",\"total_energy_error\":" + format_double(r.total_energy_error, precision);
    out += ",\"transform_distortion_pct\":" + format_double(r.transform_distortion_pct, precision);
    out += ",\"deviation_from_diagonality\":" + format_double(r.deviation_from_diagonality, precision);
    out += "}";
    return out;
}

}  // namespace tchebi
