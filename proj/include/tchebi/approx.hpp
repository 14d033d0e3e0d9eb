#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tchebi/matrix.hpp"

namespace tchebi {

// Round half away from zero: sign(x) * floor(|x| + 1/2).
double round_half_away(double x);
int round_half_away_int(double x);

// Reciprocal of each row's maximum absolute entry, so that every row of
// diag(result) * dtt_matrix(n) peaks at exactly 1. Only the coding sizes are
// supported.
std::vector<double> row_normalizer(int size);

// Entry-wise round(alpha * diag(row_normalizer) * dtt_matrix), 0 < alpha < 5/2.
// All entries land in {0, +-1, +-2}.
IMat raw_parametric_matrix(int size, double alpha);

// Same, with every row divided by its gcd. For this codomain that only halves
// rows whose entries are all even, which leaves the scaled approximation
// unchanged and matches the canonical published matrices at alpha = 2.
IMat parametric_matrix(int size, double alpha);

bool has_zero_row(const IMat& m);

// Diagonal of the orthogonalization matrix: entry k = 1 / sqrt(row-k squared
// sum). Throws on a zero row.
std::vector<double> scaling_diagonal(const IMat& core);

// True iff m * m^T is exactly diagonal (integer arithmetic).
bool orthogonality_check(const IMat& m);

// Low-complexity matrix together with its orthogonalization diagonal; the
// dense form has unit-norm rows.
struct ScaledApproximation {
    IMat core;
    std::vector<double> scaling;

    int size() const { return core.rows(); }
    Mat dense() const;
};

ScaledApproximation make_scaled_approximation(IMat core);

// The optimal 8-point low-complexity matrix (alpha = 2) and its scaled form.
IMat low_complexity_8();
IMat low_complexity_4();
ScaledApproximation approx_dtt_8();
ScaledApproximation approx_dtt_4();

struct OperationCounts {
    int additions = 0;
    int shifts = 0;
    int multiplications = 0;

    int total() const { return additions + shifts + multiplications; }
    bool operator==(const OperationCounts&) const = default;
};

// Sparse factorization of the 8-point low-complexity matrix into a butterfly
// layer, two shift-add layers and an output permutation.
struct FastAlgorithm8 {
    IMat butterfly;     // 8x8
    IMat shift_add_1;   // 10x8
    IMat shift_add_2;   // 8x10
    IMat permutation;   // 8x8
    OperationCounts counts;
};

const FastAlgorithm8& fast_algorithm_8();

// Structural cost of evaluating one stage matrix: each two-term combination
// is one addition, each coefficient of magnitude 2 one shift; sign flips are
// absorbed into the adders.
OperationCounts count_matrix_operations(const IMat& m);
OperationCounts count_operations(const FastAlgorithm8& alg);

// Forward 8-point transform through the staged flow graph; exactly equal to
// the dense low_complexity_8() multiply (24 additions, 6 doublings).
std::array<double, 8> fast_forward_8(const std::array<double, 8>& x);
std::array<int64_t, 8> fast_forward_8(const std::array<int64_t, 8>& x);

// Near inverse: scaling applied, then the forward flow graph with stage order
// and arrows reversed; computes dense(approx_dtt_8())^T * x.
std::array<double, 8> near_inverse_8(const std::array<double, 8>& x);

enum class NearInversePolicy {
    kTransposeReuse,    // synthesis via the transposed scaled matrix
    kEdiagCorrection,   // core^T * ediag(core*core^T)^-1 * scaling^-1
    kPrintedDiagonal,   // core^T * diag(8,3,3,5,3,7/2,3,5/2)^-1, kept for comparison
};

// Dense synthesis matrix S such that reconstruction is S * M * S^T.
Mat near_inverse_matrix(const ScaledApproximation& t,
                        NearInversePolicy policy = NearInversePolicy::kTransposeReuse);

// Interval propagation through the fast-algorithm stages: given |x_i| <=
// input_bound, returns the largest intermediate magnitude any stage output can
// reach.
double fast_forward_8_value_bound(double input_bound);

}  // namespace tchebi
