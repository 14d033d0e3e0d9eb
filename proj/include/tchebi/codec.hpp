#pragma once

#include <string>
#include <vector>

#include "tchebi/image.hpp"
#include "tchebi/matrix.hpp"
#include "tchebi/transform.hpp"

namespace tchebi {

// JPEG-style quantization table derived from the default table by the quality
// factor law; entries clamped to a minimum of 1.
struct QuantTable {
    int qf = 50;
    int s_factor = 100;
    IMat table;  // 8x8
};

const IMat& default_quant_table();
QuantTable quant_table(int qf);

// Forward transform + quantization of one 8x8 pixel block (round half away
// from zero).
IMat encode_block(const Mat& block, const BlockTransform& t, const QuantTable& q);

// Same result computed from the integer core with the scaling folded into the
// quantization step.
IMat encode_block_absorbed(const Mat& block, const ScaledApproximation& t, const QuantTable& q);

// Dequantize, inverse transform, round and clamp to [0, 255].
Mat decode_block(const IMat& coeffs, const BlockTransform& t, const QuantTable& q);

// Quantized coefficients for a whole image: one 8x8 integer block per grid
// cell, row-major over the block grid.
struct QuantizedImage {
    int blocks_wide = 0;
    int blocks_high = 0;
    std::vector<IMat> blocks;
    QuantTable quant;
    std::string transform_id;

    long long nonzero_count() const;
};

struct CompressionReport {
    std::string transform;
    int qf = 0;
    double ssim = 0.0;
    long long nonzero_coeffs = 0;
};

// Blockify + transform + quantize. Dimensions must be multiples of 8. Blocks
// are processed independently (parallel over `threads`), with results
// identical for any thread count.
QuantizedImage quantize_image(const GrayImage& img, int qf, const BlockTransform& t,
                              int threads = 1);

// Dequantize + inverse transform + round/clamp.
GrayImage reconstruct_image(const QuantizedImage& qimg, const BlockTransform& t,
                            int threads = 1);

// Full round trip with the quality report.
std::pair<GrayImage, CompressionReport> compress_image(const GrayImage& img, int qf,
                                                       const BlockTransform& t, int threads = 1);

std::string compression_report_json(const CompressionReport& r, int precision = 0);

struct CurvePoint {
    std::string transform;
    int qf = 0;
    double mean_ssim = 0.0;
    double mean_nonzero_coeffs = 0.0;
};

// Mean SSIM / nonzero-count per (transform, qf) over a corpus; deterministic
// row order (transforms in the given order, qf ascending).
std::vector<CurvePoint> quality_curve(const std::vector<GrayImage>& corpus,
                                      const std::vector<int>& qf_list,
                                      const std::vector<std::string>& transform_ids,
                                      int threads = 1);

// CSV with header transform,qf,mean_ssim,mean_nonzero_coeffs.
std::string curve_csv(const std::vector<CurvePoint>& points, int precision = 0);

}  // namespace tchebi
