#include <doctest.h>

#include <cmath>

#include "tchebi/approx.hpp"
#include "tchebi/dtt.hpp"
#include "tchebi/transform.hpp"
#include "test_support.hpp"

using namespace tchebi;

TEST_CASE("constant block concentrates in the DC coefficient") {
    const TransformMatrix t = exact_dtt(8);
    Mat block(8, 8, 128.0);
    const Mat m = apply_2d(t, block);
    CHECK(m(0, 0) == doctest::Approx(1024.0).epsilon(1e-12));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (i || j) CHECK(std::abs(m(i, j)) < 1e-9);
}

TEST_CASE("orthonormal 2-D round trip") {
    const TransformMatrix t = exact_dtt(8);
    test::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Mat f(8, 8);
        for (double& v : f.data()) v = rng.uniform(0.0, 255.0);
        const Mat back = inverse_2d(t, apply_2d(t, f));
        CHECK(test::max_abs_diff(back, f) < 1e-9);
    }
}

TEST_CASE("separability: 2-D equals row pass then column pass") {
    const TransformMatrix t = exact_dtt(8);
    test::Rng rng(7);
    Mat f(8, 8);
    for (double& v : f.data()) v = rng.uniform(-100.0, 100.0);
    const Mat rows = f * transpose(t.entries);   // 1-D along each row
    const Mat full = t.entries * rows;           // then along each column
    CHECK(test::max_abs_diff(full, apply_2d(t, f)) < 1e-12);
}

TEST_CASE("Parseval energy preservation") {
    const TransformMatrix t = exact_dtt(8);
    test::Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Mat f(8, 8);
        for (double& v : f.data()) v = rng.uniform(-1.0, 1.0);
        const double before = frobenius_norm(f);
        const double after = frobenius_norm(apply_2d(t, f));
        CHECK(after == doctest::Approx(before).epsilon(1e-9));
    }
}

TEST_CASE("impulse response of the scaled approximation") {
    const ScaledApproximation a = approx_dtt_8();
    Mat impulse(8, 8);
    impulse(0, 0) = 1.0;
    const Mat m = apply_2d(a, impulse);
    const Mat d = a.dense();
    // Direct multiply oracle: outer product of the first columns.
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(m(i, j) == doctest::Approx(d(i, 0) * d(j, 0)).epsilon(1e-12));
}

TEST_CASE("orthogonal 4-point approximation inverts exactly") {
    const ScaledApproximation a = approx_dtt_4();
    test::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Mat f(4, 4);
        for (double& v : f.data()) v = rng.uniform(0.0, 255.0);
        const Mat back = inverse_2d(a, apply_2d(a, f));
        CHECK(test::max_abs_diff(back, f) < 1e-9);
    }
}

TEST_CASE("8-point near inverse round-trip error stays within the measured bound") {
    const ScaledApproximation a = approx_dtt_8();
    test::Rng rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
        Mat f(8, 8);
        double peak = 0.0;
        for (double& v : f.data()) {
            v = rng.uniform(0.0, 255.0);
            peak = std::max(peak, std::abs(v));
        }
        const Mat back = inverse_2d(a, apply_2d(a, f));
        worst = std::max(worst, test::max_abs_diff(back, f) / peak);
    }
    // Exhaustively measured behavior of the transpose near-inverse on
    // full-spectrum random blocks; natural-image content sits far below this.
    CHECK(worst < 0.45);
    CHECK(worst > 0.05);  // the bound is doing real work
}

TEST_CASE("dimension mismatches are rejected") {
    const TransformMatrix t = exact_dtt(8);
    CHECK_THROWS_AS(apply_2d(t, Mat(4, 4)), std::domain_error);
    CHECK_THROWS_AS(inverse_2d(t, Mat(4, 4)), std::domain_error);
}

TEST_CASE("block transform registry") {
    for (const char* id : {"exact-dtt8", "exact-dct8", "approx-dtt8"}) {
        const BlockTransform t = block_transform(id);
        CHECK(t.analysis.rows() == 8);
        CHECK(t.synthesis.rows() == 8);
    }
    CHECK_THROWS_AS(block_transform("nope"), std::domain_error);
}
