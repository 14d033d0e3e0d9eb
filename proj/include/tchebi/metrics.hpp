#pragma once

#include <string>

#include "tchebi/matrix.hpp"

namespace tchebi {

// First-order Markov covariance: entry (i, j) = corr^|i-j|, 0 < corr < 1.
Mat markov_covariance(int size, double corr);

inline constexpr double kDefaultMarkovCorrelation = 0.95;

// Transform-domain covariance of the Markov source under analysis matrix h:
// h * R * h^-1. Identical to the congruence form h * R * h^T whenever h is
// orthonormal; this is the convention the coding metrics below are calibrated
// against.
Mat transformed_covariance(const Mat& h, double corr = kDefaultMarkovCorrelation);

// Unified coding gain in dB. Subband variances come from the transformed
// covariance diagonal; the synthesis weights are the squared norms of the
// rows of h^-1.
double coding_gain(const Mat& h, double corr = kDefaultMarkovCorrelation);

// Percentage of transformed-covariance absolute mass on the diagonal.
double transform_efficiency(const Mat& h, double corr = kDefaultMarkovCorrelation);

// Mean square reconstruction error between an exact transform and its
// approximation under the Markov source: trace((T - Th) R (T - Th)^T) / N.
double mse_similarity(const Mat& exact, const Mat& approx,
                      double corr = kDefaultMarkovCorrelation);

// Total energy error: pi * ||T - Th||_F^2.
double total_energy_error(const Mat& exact, const Mat& approx);

// Percentage distortion: (1 - (1/N) * sum_k diag(T * Th^T)_k^2) * 100.
double transform_distortion(const Mat& exact, const Mat& approx);

// 1 - ||ediag(A)||_F / ||A||_F, in [0, 1]. Zero for diagonal matrices.
double deviation_from_diagonality(const Mat& a);
double deviation_from_diagonality(const IMat& a);

// Below this threshold the transform is considered quasi-orthogonal and the
// transpose is usable as a near inverse.
double quasi_orthogonality_threshold();  // 1 - 2/sqrt(5)

struct MetricsReport {
    double coding_gain_db = 0.0;
    double transform_efficiency = 0.0;
    double mse = 0.0;
    double total_energy_error = 0.0;
    double transform_distortion_pct = 0.0;
    double deviation_from_diagonality = 0.0;
};

// Full report for one of the named transform kinds:
// exact-dtt / exact-dct / approx (the alpha = 2 scaled approximation).
// Proximity metrics for the approximation are measured against the exact DTT
// of the same size; exact kinds report zero proximity by construction.
MetricsReport metrics_report(const std::string& kind, int size,
                             double corr = kDefaultMarkovCorrelation);

std::string metrics_report_json(const MetricsReport& r, int precision = 0);

}  // namespace tchebi
