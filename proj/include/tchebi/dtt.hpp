#pragma once

#include "tchebi/matrix.hpp"

namespace tchebi {

// Discrete Tchebichef polynomial value t_k[n] for an N-point domain, from the
// three-term recursion seeded with t_0[n] = 1 and t_1[n] = 2n - N + 1. The
// recursion over rationals produces exact integers; values are carried in
// doubles (exact up to 2^53).
double tcheb_poly(int k, int n, int size);

// Squared Euclidean norm of polynomial row k: (N+k)! / ((2k+1) * (N-k-1)!),
// evaluated as a running product to avoid large intermediate factorials.
double poly_norm_sq(int k, int size);

// Full table of t_k[n], row k = order, column n = sample point.
Mat tchebichef_basis(int size);

// Orthonormal N-point DTT analysis matrix: row k = t_k[.] / sqrt(poly_norm_sq).
Mat dtt_matrix(int size);

// Orthonormal DCT-II matrix, used as a calibration reference for the coding
// metrics.
Mat dct_matrix(int size);

}  // namespace tchebi
