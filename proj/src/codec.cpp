#include "tchebi/codec.hpp"

#include <atomic>
#include <cmath>

#include "tchebi/approx.hpp"
#include "tchebi/io.hpp"
#include "tchebi/ssim.hpp"
#include "tchebi/threading.hpp"

namespace tchebi {

const IMat& default_quant_table() {
    static const IMat q0{{16, 11, 10, 16, 24, 40, 51, 61},
                         {12, 12, 14, 19, 26, 58, 60, 55},
                         {14, 13, 16, 24, 40, 57, 69, 56},
                         {14, 17, 22, 29, 51, 84, 80, 62},
                         {18, 22, 37, 56, 68, 109, 103, 77},
                         {24, 35, 55, 64, 81, 104, 113, 92},
                         {49, 64, 78, 87, 103, 121, 120, 101},
                         {72, 92, 95, 98, 112, 100, 103, 99}};
    return q0;
}

QuantTable quant_table(int qf) {
    if (qf < 1 || qf > 99) throw std::domain_error("quant_table: QF must be in [1, 99]");
    QuantTable q;
    q.qf = qf;
    q.s_factor = qf < 50 ? 5000 / qf : 200 - 2 * qf;
    q.table = IMat(8, 8);
    const IMat& q0 = default_quant_table();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            q.table(i, j) = std::max(1, (q.s_factor * q0(i, j) + 50) / 100);
    return q;
}

namespace {

// Quantizer rounding: round half away from zero, treating quotients within a
// hair of a half-integer as the exact ties they are in exact arithmetic
// (integer transform coefficients over rational effective divisors). The
// tolerance makes every evaluation order of the same quotient resolve ties
// identically; legitimate non-tie quotients sit many orders of magnitude
// farther from the boundary.
int quantize_round(double x) {
    constexpr double kTieTolerance = 1e-9;
    const double mag = std::abs(x);
    const double whole = std::floor(mag);
    int result;
    if (std::abs(mag - whole - 0.5) < kTieTolerance)
        result = static_cast<int>(whole) + 1;
    else
        result = static_cast<int>(std::floor(mag + 0.5));
    return x < 0.0 ? -result : result;
}

}  // namespace

IMat encode_block(const Mat& block, const BlockTransform& t, const QuantTable& q) {
    if (block.rows() != 8 || block.cols() != 8)
        throw std::domain_error("encode_block: block must be 8x8");
    const Mat m = t.analysis * block * transpose(t.analysis);
    IMat coeffs(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            coeffs(i, j) = quantize_round(m(i, j) / q.table(i, j));
    return coeffs;
}

IMat encode_block_absorbed(const Mat& block, const ScaledApproximation& t, const QuantTable& q) {
    if (block.rows() != 8 || block.cols() != 8 || t.size() != 8)
        throw std::domain_error("encode_block_absorbed: 8x8 only");
    const Mat core = to_mat(t.core);
    const Mat m = core * block * transpose(core);
    IMat coeffs(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const double absorbed_q = q.table(i, j) / (t.scaling[i] * t.scaling[j]);
            coeffs(i, j) = quantize_round(m(i, j) / absorbed_q);
        }
    return coeffs;
}

Mat decode_block(const IMat& coeffs, const BlockTransform& t, const QuantTable& q) {
    if (coeffs.rows() != 8 || coeffs.cols() != 8)
        throw std::domain_error("decode_block: coefficients must be 8x8");
    Mat m(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m(i, j) = static_cast<double>(coeffs(i, j)) * q.table(i, j);
    Mat rec = t.synthesis * m * transpose(t.synthesis);
    for (double& v : rec.data()) {
        v = round_half_away(v);
        if (v < 0.0) v = 0.0;
        if (v > 255.0) v = 255.0;
    }
    return rec;
}

long long QuantizedImage::nonzero_count() const {
    long long nz = 0;
    for (const IMat& b : blocks)
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                if (b(r, c) != 0) ++nz;
    return nz;
}

QuantizedImage quantize_image(const GrayImage& img, int qf, const BlockTransform& t,
                              int threads) {
    if (img.width % 8 != 0 || img.height % 8 != 0)
        throw std::domain_error("quantize_image: dimensions must be multiples of 8");
    QuantizedImage qimg;
    qimg.blocks_wide = img.width / 8;
    qimg.blocks_high = img.height / 8;
    qimg.quant = quant_table(qf);
    qimg.transform_id = t.id;
    qimg.blocks.assign(static_cast<size_t>(qimg.blocks_wide) * qimg.blocks_high, IMat());

    parallel_for(qimg.blocks.size(), threads, [&](size_t idx) {
        const int bi = static_cast<int>(idx) / qimg.blocks_wide;
        const int bj = static_cast<int>(idx) % qimg.blocks_wide;
        Mat block(8, 8);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) block(r, c) = img.at(bi * 8 + r, bj * 8 + c);
        qimg.blocks[idx] = encode_block(block, t, qimg.quant);
    });
    return qimg;
}

GrayImage reconstruct_image(const QuantizedImage& qimg, const BlockTransform& t, int threads) {
    GrayImage out = make_image(qimg.blocks_wide * 8, qimg.blocks_high * 8);
    parallel_for(qimg.blocks.size(), threads, [&](size_t idx) {
        const int bi = static_cast<int>(idx) / qimg.blocks_wide;
        const int bj = static_cast<int>(idx) % qimg.blocks_wide;
        const Mat rec = decode_block(qimg.blocks[idx], t, qimg.quant);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                out.at(bi * 8 + r, bj * 8 + c) = static_cast<uint8_t>(rec(r, c));
    });
    return out;
}

std::pair<GrayImage, CompressionReport> compress_image(const GrayImage& img, int qf,
                                                       const BlockTransform& t, int threads) {
    const QuantizedImage qimg = quantize_image(img, qf, t, threads);
    GrayImage out = reconstruct_image(qimg, t, threads);

    CompressionReport report;
    report.transform = t.id;
    report.qf = qf;
    report.nonzero_coeffs = qimg.nonzero_count();
    report.ssim = ssim(img, out);
    return {std::move(out), std::move(report)};
}

std::string compression_report_json(const CompressionReport& r, int precision) {
    std::string out = "{";
    out += "\"transform\":\"" + r.transform + "\"";
    out += ",\"qf\":" + std::to_string(r.qf);
    out += ",\"ssim\":" + format_double(r.ssim, precision);
    out += ",\"nonzero_coeffs\":" + std::to_string(r.nonzero_coeffs);
    out += "}";
    return out;
}

std::vector<CurvePoint> quality_curve(const std::vector<GrayImage>& corpus,
                                      const std::vector<int>& qf_list,
                                      const std::vector<std::string>& transform_ids,
                                      int threads) {
    if (corpus.empty()) throw std::domain_error("quality_curve: empty corpus");
    if (qf_list.empty()) throw std::domain_error("quality_curve: empty QF list");
    if (transform_ids.empty()) throw std::domain_error("quality_curve: no transforms");
    std::vector<CurvePoint> points;
    for (const std::string& id : transform_ids) {
        const BlockTransform t = block_transform(id);
        for (int qf : qf_list) {
            CurvePoint p;
            p.transform = id;
            p.qf = qf;
            for (const GrayImage& img : corpus) {
                const auto [rec, report] = compress_image(img, qf, t, threads);
                p.mean_ssim += report.ssim;
                p.mean_nonzero_coeffs += static_cast<double>(report.nonzero_coeffs);
            }
            p.mean_ssim /= static_cast<double>(corpus.size());
            p.mean_nonzero_coeffs /= static_cast<double>(corpus.size());
            points.push_back(std::move(p));
        }
    }
    return points;
}

std::string curve_csv(const std::vector<CurvePoint>& points, int precision) {
    std::string out = "transform,qf,mean_ssim,mean_nonzero_coeffs\n";
    for (const CurvePoint& p : points) {
        out += p.transform;
        out += ',';
        out += std::to_string(p.qf);
        out += ',';
        out += format_double(p.mean_ssim, precision);
        out += ',';
        out += format_double(p.mean_nonzero_coeffs, precision);
        out += '\n';
    }
    return out;
}

}  // namespace tchebi
