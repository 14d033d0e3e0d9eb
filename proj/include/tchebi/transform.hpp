#pragma once

#include <string>

#include "tchebi/approx.hpp"
#include "tchebi/matrix.hpp"

namespace tchebi {

enum class TransformKind { kExactDtt, kExactDct, kApproximation };

struct TransformMatrix {
    int n = 0;
    Mat entries;
    TransformKind kind = TransformKind::kExactDtt;
};

TransformMatrix exact_dtt(int size);
TransformMatrix exact_dct(int size);

// 2-D separable transform: T * block * T^T.
Mat apply_2d(const TransformMatrix& t, const Mat& block);
Mat apply_2d(const ScaledApproximation& t, const Mat& block);

// Exact kinds invert with the transpose (true inverse); approximations use the
// transpose-based near inverse by default.
Mat inverse_2d(const TransformMatrix& t, const Mat& coeffs);
Mat inverse_2d(const ScaledApproximation& t, const Mat& coeffs,
               NearInversePolicy policy = NearInversePolicy::kTransposeReuse);

// Analysis/synthesis pair used by the codec, addressable by name:
// exact-dtt8, exact-dct8, approx-dtt8.
struct BlockTransform {
    std::string id;
    Mat analysis;
    Mat synthesis;  // reconstruction is synthesis * M * synthesis^T
};

BlockTransform block_transform(const std::string& id);

}  // namespace tchebi
