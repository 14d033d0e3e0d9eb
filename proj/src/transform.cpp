#include "tchebi/transform.hpp"

#include "tchebi/dtt.hpp"

namespace tchebi {

namespace {

void check_block(int n, const Mat& block) {
    if (block.rows() != n || block.cols() != n)
        throw std::domain_error("2-D transform: block size does not match transform size");
}

}  // namespace

TransformMatrix exact_dtt(int size) {
    return TransformMatrix{size, dtt_matrix(size), TransformKind::kExactDtt};
}

TransformMatrix exact_dct(int size) {
    return TransformMatrix{size, dct_matrix(size), TransformKind::kExactDct};
}

Mat apply_2d(const TransformMatrix& t, const Mat& block) {
    check_block(t.n, block);
    return t.entries * block * transpose(t.entries);
}

Mat apply_2d(const ScaledApproximation& t, const Mat& block) {
    check_block(t.size(), block);
    const Mat d = t.dense();
    return d * block * transpose(d);
}

Mat inverse_2d(const TransformMatrix& t, const Mat& coeffs) {
    check_block(t.n, coeffs);
    return transpose(t.entries) * coeffs * t.entries;
}

Mat inverse_2d(const ScaledApproximation& t, const Mat& coeffs, NearInversePolicy policy) {
    check_block(t.size(), coeffs);
    const Mat s = near_inverse_matrix(t, policy);
    return s * coeffs * transpose(s);
}

BlockTransform block_transform(const std::string& id) {
    if (id == "exact-dtt8") {
        const Mat t = dtt_matrix(8);
        return BlockTransform{id, t, transpose(t)};
    }
    if (id == "exact-dct8") {
        const Mat c = dct_matrix(8);
        return BlockTransform{id, c, transpose(c)};
    }
    if (id == "approx-dtt8") {
        const ScaledApproximation a = approx_dtt_8();
        return BlockTransform{id, a.dense(), near_inverse_matrix(a)};
    }
    throw std::domain_error("unknown transform id: " + id);
}

}  // namespace tchebi
