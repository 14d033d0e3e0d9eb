// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Pass the CLI binary path as argv[1] to enable the
// determinism criterion.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tchebi/approx.hpp"
#include "tchebi/codec.hpp"
#include "tchebi/dtt.hpp"
#include "tchebi/image.hpp"
#include "tchebi/io.hpp"
#include "tchebi/metrics.hpp"
#include "tchebi/optimizer.hpp"
#include "tchebi/ssim.hpp"
#include "tchebi/threading.hpp"
#include "tchebi/transform.hpp"

using namespace tchebi;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;
    double seconds = 0.0;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            failures.push_back(what);
        }
    }
    void require_close(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol)) {
            passed = false;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s: got %.6g, want %.6g +- %.2g", what.c_str(), got,
                          want, tol);
            failures.push_back(buf);
        }
    }
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

const IMat kPublished4{{1, 1, 1, 1}, {-2, -1, 1, 2}, {1, -1, -1, 1}, {-1, 2, -2, 1}};
const IMat kPublished8{{1, 1, 1, 1, 1, 1, 1, 1},
                       {-2, -1, -1, 0, 0, 1, 1, 2},
                       {2, 0, -1, -1, -1, -1, 0, 2},
                       {-2, 1, 2, 1, -1, -2, -1, 2},
                       {1, -2, 0, 1, 1, 0, -2, 1},
                       {-1, 2, -1, -1, 1, 1, -2, 1},
                       {0, -1, 2, -1, -1, 2, -1, 0},
                       {0, 0, -1, 2, -2, 1, 0, 0}};

void criterion_matrix_identities(Criterion& c) {
    Timer timer;

    const IMat int4{{1, 1, 1, 1}, {-3, -1, 1, 3}, {1, -1, -1, 1}, {-1, 3, -3, 1}};
    const double f4[4] = {0.5, 1.0 / std::sqrt(20.0), 0.5, 1.0 / std::sqrt(20.0)};
    const Mat t4 = dtt_matrix(4);
    double err4 = 0.0;
    for (int k = 0; k < 4; ++k)
        for (int n = 0; n < 4; ++n) err4 = std::max(err4, std::abs(t4(k, n) - f4[k] * int4(k, n)));
    c.require(err4 < 1e-12, "dtt_matrix(4) deviates from the scaled integer form by " +
                                format_double(err4, 3));

    const IMat int8{{1, 1, 1, 1, 1, 1, 1, 1},
                    {-7, -5, -3, -1, 1, 3, 5, 7},
                    {7, 1, -3, -5, -5, -3, 1, 7},
                    {-7, 5, 7, 3, -3, -7, -5, 7},
                    {7, -13, -3, 9, 9, -3, -13, 7},
                    {-7, 23, -17, -15, 15, 17, -23, 7},
                    {1, -5, 9, -5, -5, 9, -5, 1},
                    {-1, 7, -21, 35, -35, 21, -7, 1}};
    // Row-4 scale is 1/sqrt(154), the value consistent with the printed
    // integer rows and orthonormality (the reprinted 1/sqrt(142) is not).
    const double f8[8] = {1.0 / std::sqrt(2.0),   1.0 / std::sqrt(42.0), 1.0 / std::sqrt(42.0),
                          1.0 / std::sqrt(66.0),  1.0 / std::sqrt(154.0), 1.0 / std::sqrt(546.0),
                          1.0 / std::sqrt(66.0),  1.0 / std::sqrt(858.0)};
    const Mat t8 = dtt_matrix(8);
    double err8 = 0.0;
    for (int k = 0; k < 8; ++k)
        for (int n = 0; n < 8; ++n)
            err8 = std::max(err8, std::abs(t8(k, n) - 0.5 * f8[k] * int8(k, n)));
    c.require(err8 < 1e-12, "dtt_matrix(8) deviates from the scaled integer form by " +
                                format_double(err8, 3));

    c.require(parametric_matrix(4, 2.0) == kPublished4, "parametric_matrix(4, 2) is not the published matrix");
    c.require(parametric_matrix(8, 2.0) == kPublished8, "parametric_matrix(8, 2) is not the published matrix");

    c.seconds = timer.seconds();
    c.require(c.seconds < 1.0, "runtime exceeded 1 s");
}

void criterion_optimization(Criterion& c) {
    Timer timer;
    const double step = 0.001;

    const SearchResult r4 = enumerate_candidates(4, 0.001, 2.499, step);
    const SearchResult r8 = enumerate_candidates(8, 0.001, 2.499, step);

    const Candidate* c4 = nullptr;
    for (const Candidate& cand : r4.candidates)
        if (cand.contains_alpha2) c4 = &cand;
    const Candidate* c8 = nullptr;
    for (const Candidate& cand : r8.candidates)
        if (cand.contains_alpha2) c8 = &cand;

    c.require(c4 != nullptr && c4->matrix == kPublished4, "no alpha=2 candidate for N=4");
    c.require(c8 != nullptr && c8->matrix == kPublished8, "no alpha=2 candidate for N=8");
    if (c4) {
        c.require_close(c4->alpha_low, 1.5, step, "N=4 interval lower endpoint");
        c.require_close(c4->alpha_high, 2.5, step, "N=4 interval upper endpoint");
    }
    if (c8) {
        c.require_close(c8->alpha_low, 23.0 / 14.0, step, "N=8 interval lower endpoint");
        c.require_close(c8->alpha_high, 69.0 / 34.0, step, "N=8 interval upper endpoint");
    }

    c.seconds = timer.seconds();
    c.require(c.seconds < 30.0, "runtime exceeded 30 s");
}

void criterion_metric_table(Criterion& c) {
    Timer timer;
    const double rho = 0.95;

    const Mat t8 = dtt_matrix(8);
    const Mat a8 = approx_dtt_8().dense();
    c.require_close(coding_gain(a8, rho), 8.57, 0.01, "coding gain of the 8-point approximation");
    c.require_close(transform_efficiency(a8, rho), 89.52, 0.05,
                    "efficiency of the 8-point approximation");
    c.require_close(mse_similarity(t8, a8, rho), 0.002, 0.0005, "8-point MSE");
    c.require_close(total_energy_error(t8, a8), 0.77, 0.01, "8-point total energy error");
    c.require_close(transform_distortion(t8, a8), 3.03, 0.05, "8-point distortion");
    c.require_close(deviation_from_diagonality(low_complexity_8() * transpose(low_complexity_8())),
                    0.024, 0.001, "8-point deviation from diagonality");

    c.require_close(coding_gain(t8, rho), 8.68, 0.01, "exact 8-point DTT coding gain");
    c.require_close(transform_efficiency(t8, rho), 92.86, 0.05, "exact 8-point DTT efficiency");

    const Mat t4 = dtt_matrix(4);
    const Mat a4 = approx_dtt_4().dense();
    c.require_close(coding_gain(a4, rho), 7.55, 0.01, "coding gain of the 4-point approximation");
    c.require_close(transform_efficiency(a4, rho), 97.33, 0.05,
                    "efficiency of the 4-point approximation");
    c.require_close(mse_similarity(t4, a4, rho), 0.001, 0.0005, "4-point MSE");
    c.require_close(total_energy_error(t4, a4), 0.13, 0.01, "4-point total energy error");
    // Irreproducible published value: the distortion formula that matches the
    // published 8-point figure (3.03) gives exactly 1.00 here; 0.29 is only
    // consistent with measuring the 4-point approximation against the exact
    // DCT (0.25). Asserted as published; see the test log for the measurement.
    c.require_close(transform_distortion(t4, a4), 0.29, 0.05, "4-point distortion");
    c.require_close(deviation_from_diagonality(low_complexity_4() * transpose(low_complexity_4())),
                    0.0, 1e-12, "4-point deviation from diagonality");

    c.require_close(coding_gain(dct_matrix(8), rho), 8.83, 0.01, "DCT calibration coding gain");
    c.require_close(transform_efficiency(dct_matrix(8), rho), 93.99, 0.05,
                    "DCT calibration efficiency");

    c.seconds = timer.seconds();
}

void criterion_fast_algorithm(Criterion& c) {
    Timer timer;

    const FastAlgorithm8& alg = fast_algorithm_8();
    const IMat product = alg.permutation * alg.shift_add_2 * alg.shift_add_1 * alg.butterfly;
    c.require(product == kPublished8, "stage product differs from the published matrix");

    const IMat dense = low_complexity_8();
    bool all_match = true;
    for (int k = 0; k < 8; ++k) {
        std::array<int64_t, 8> e{};
        e[k] = 1;
        const auto fast = fast_forward_8(e);
        for (int i = 0; i < 8; ++i)
            if (fast[i] != dense(i, k)) all_match = false;
    }
    c.require(all_match, "fast path differs from the dense multiply on the canonical basis");

    uint64_t state = 0x853c49e6748fea9bull;
    auto next = [&state] {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    };
    bool random_match = true;
    for (int trial = 0; trial < 10000; ++trial) {
        std::array<int64_t, 8> x;
        for (auto& v : x) v = static_cast<int64_t>(next() % 256) - 128;
        const auto fast = fast_forward_8(x);
        for (int i = 0; i < 8; ++i) {
            int64_t want = 0;
            for (int j = 0; j < 8; ++j) want += static_cast<int64_t>(dense(i, j)) * x[j];
            if (fast[i] != want) random_match = false;
        }
    }
    c.require(random_match, "fast path differs from the dense multiply on random vectors");

    const OperationCounts fast_counts = count_operations(alg);
    c.require(fast_counts == OperationCounts{24, 6, 0},
              "fast counts are {" + std::to_string(fast_counts.additions) + ", " +
                  std::to_string(fast_counts.shifts) + ", " +
                  std::to_string(fast_counts.multiplications) + "}, want {24, 6, 0}");
    const OperationCounts direct = count_matrix_operations(raw_parametric_matrix(8, 2.0));
    c.require(direct == OperationCounts{44, 24, 0},
              "direct counts are {" + std::to_string(direct.additions) + ", " +
                  std::to_string(direct.shifts) + ", " +
                  std::to_string(direct.multiplications) + "}, want {44, 24, 0}");

    c.seconds = timer.seconds();
    c.require(c.seconds < 5.0, "runtime exceeded 5 s");
}

void criterion_quasi_orthogonality(Criterion& c) {
    Timer timer;

    c.require(orthogonality_check(low_complexity_4()), "4-point matrix should pass orthogonality");
    c.require(!orthogonality_check(low_complexity_8()), "8-point matrix should fail orthogonality");

    const IMat gram = low_complexity_8() * transpose(low_complexity_8());
    const double delta = deviation_from_diagonality(gram);
    c.require(delta < quasi_orthogonality_threshold(),
              "deviation " + format_double(delta, 4) + " is not below the quasi-orthogonality threshold");

    const int expected_diag[8] = {8, 12, 12, 20, 12, 14, 12, 10};
    for (int i = 0; i < 8; ++i)
        c.require(gram(i, i) == expected_diag[i],
                  "gram diagonal entry " + std::to_string(i) + " is " + std::to_string(gram(i, i)));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (i != j)
                c.require(gram(i, j) == 0 || std::abs(gram(i, j)) == 2,
                          "off-diagonal gram entry outside {0, +-2}");

    c.seconds = timer.seconds();
}

void criterion_codec_properties(Criterion& c) {
    Timer timer;

    c.require(quant_table(50).table == default_quant_table(), "quant_table(50) is not the default table");

    const auto corpus_named = bundled_corpus(512);
    std::vector<GrayImage> corpus;
    for (const auto& [name, img] : corpus_named) corpus.push_back(img);

    std::vector<int> qfs;
    for (int q = 10; q <= 90; q += 5) qfs.push_back(q);
    const int threads = resolve_threads(0);
    const auto points = quality_curve(corpus, qfs, {"exact-dtt8", "approx-dtt8"}, threads);

    std::vector<double> exact_curve, approx_curve;
    for (const CurvePoint& p : points)
        (p.transform == "exact-dtt8" ? exact_curve : approx_curve).push_back(p.mean_ssim);

    for (size_t i = 1; i < exact_curve.size(); ++i)
        c.require(exact_curve[i] + 1e-12 >= exact_curve[i - 1],
                  "exact-DTT mean SSIM decreases between QF " + std::to_string(qfs[i - 1]) +
                      " and " + std::to_string(qfs[i]));
    for (size_t i = 1; i < approx_curve.size(); ++i)
        c.require(approx_curve[i] + 1e-12 >= approx_curve[i - 1],
                  "approximation mean SSIM decreases between QF " + std::to_string(qfs[i - 1]) +
                      " and " + std::to_string(qfs[i]));
    for (size_t i = 0; i < exact_curve.size(); ++i)
        c.require(std::abs(exact_curve[i] - approx_curve[i]) <= 0.05,
                  "SSIM gap " + format_double(std::abs(exact_curve[i] - approx_curve[i]), 3) +
                      " at QF " + std::to_string(qfs[i]));

    // Scaling absorption on corpus blocks, bit for bit.
    const ScaledApproximation approx = approx_dtt_8();
    const BlockTransform t = block_transform("approx-dtt8");
    bool identical = true;
    for (int qf : {10, 50, 90}) {
        const QuantTable q = quant_table(qf);
        for (const GrayImage& img : corpus) {
            for (int bi = 0; bi < img.height; bi += 8)
                for (int bj = 0; bj < img.width; bj += 8) {
                    Mat block(8, 8);
                    for (int r = 0; r < 8; ++r)
                        for (int col = 0; col < 8; ++col)
                            block(r, col) = img.at(bi + r, bj + col);
                    if (!(encode_block(block, t, q) == encode_block_absorbed(block, approx, q)))
                        identical = false;
                }
        }
    }
    c.require(identical, "absorbed quantization differs from the dense path");

    c.seconds = timer.seconds();
    c.require(c.seconds < 120.0, "runtime exceeded 2 min");
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_cli(const std::string& cli, const std::string& args, const std::string& stdout_path) {
    const std::string cmd = "\"" + cli + "\" " + args + " > \"" + stdout_path + "\" 2>/dev/null";
    return std::system(cmd.c_str());
}

void criterion_cli_determinism(Criterion& c, const std::string& cli) {
    Timer timer;
    if (cli.empty()) {
        c.require(false, "CLI path not provided (pass it as argv[1])");
        return;
    }

    const fs::path dir = fs::path("acceptance_tmp");
    fs::create_directories(dir);
    const std::string d = dir.string();

    // search: repeated runs are byte-identical.
    run_cli(cli, "search --n 8 --step 0.001 --front " + d + "/front_a.json", d + "/search_a.csv");
    run_cli(cli, "search --n 8 --step 0.001 --front " + d + "/front_b.json", d + "/search_b.csv");
    c.require(slurp(d + "/search_a.csv") == slurp(d + "/search_b.csv"), "search CSV differs across runs");
    c.require(!slurp(d + "/search_a.csv").empty(), "search CSV is empty");
    c.require(slurp(d + "/front_a.json") == slurp(d + "/front_b.json"), "front JSON differs across runs");

    // metrics: repeated runs are byte-identical.
    run_cli(cli, "metrics --kind approx --n 8", d + "/metrics_a.json");
    run_cli(cli, "metrics --kind approx --n 8", d + "/metrics_b.json");
    c.require(slurp(d + "/metrics_a.json") == slurp(d + "/metrics_b.json"),
              "metrics JSON differs across runs");

    // compress: repeated runs and different thread counts are byte-identical.
    write_pgm(d + "/input.pgm", test_image_zoneplate(256));
    run_cli(cli,
            "compress --input " + d + "/input.pgm --qf 35 --transform approx-dtt8 --output " + d +
                "/rec_t1.pgm --report " + d + "/rep_t1.json --threads 1",
            d + "/compress_a.out");
    run_cli(cli,
            "compress --input " + d + "/input.pgm --qf 35 --transform approx-dtt8 --output " + d +
                "/rec_tn.pgm --report " + d + "/rep_tn.json --threads " +
                std::to_string(resolve_threads(0)),
            d + "/compress_b.out");
    run_cli(cli,
            "compress --input " + d + "/input.pgm --qf 35 --transform approx-dtt8 --output " + d +
                "/rec_t1b.pgm --report " + d + "/rep_t1b.json --threads 1",
            d + "/compress_c.out");
    c.require(slurp(d + "/rec_t1.pgm") == slurp(d + "/rec_tn.pgm"),
              "reconstruction differs between thread counts");
    c.require(slurp(d + "/rec_t1.pgm") == slurp(d + "/rec_t1b.pgm"),
              "reconstruction differs across runs");
    c.require(slurp(d + "/rep_t1.json") == slurp(d + "/rep_tn.json"),
              "compression report differs between thread counts");

    // curve: thread counts and repeated runs are byte-identical.
    fs::create_directories(d + "/corpus");
    write_pgm(d + "/corpus/a.pgm", test_image_gradient(128));
    write_pgm(d + "/corpus/b.pgm", test_image_noise(128));
    run_cli(cli, "curve --input-dir " + d + "/corpus --qf 10:90:20 --threads 1", d + "/curve_t1.csv");
    run_cli(cli,
            "curve --input-dir " + d + "/corpus --qf 10:90:20 --threads " +
                std::to_string(resolve_threads(0)),
            d + "/curve_tn.csv");
    run_cli(cli, "curve --input-dir " + d + "/corpus --qf 10:90:20 --threads 1", d + "/curve_t1b.csv");
    c.require(slurp(d + "/curve_t1.csv") == slurp(d + "/curve_tn.csv"),
              "curve CSV differs between thread counts");
    c.require(slurp(d + "/curve_t1.csv") == slurp(d + "/curve_t1b.csv"),
              "curve CSV differs across runs");
    c.require(!slurp(d + "/curve_t1.csv").empty(), "curve CSV is empty");

    c.seconds = timer.seconds();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    std::vector<Criterion> criteria(7);
    criteria[0].name = "1. matrix identities";
    criterion_matrix_identities(criteria[0]);
    criteria[1].name = "2. optimization reproduction";
    criterion_optimization(criteria[1]);
    criteria[2].name = "3. metric table reproduction";
    criterion_metric_table(criteria[2]);
    criteria[3].name = "4. fast-algorithm correctness";
    criterion_fast_algorithm(criteria[3]);
    criteria[4].name = "5. quasi-orthogonality suite";
    criterion_quasi_orthogonality(criteria[4]);
    criteria[5].name = "6. codec properties";
    criterion_codec_properties(criteria[5]);
    criteria[6].name = "7. CLI determinism";
    criterion_cli_determinism(criteria[6], cli);

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::printf("[%s] %s (%.2fs)\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.seconds);
        for (const std::string& f : c.failures) std::printf("       - %s\n", f.c_str());
        if (!c.passed) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
