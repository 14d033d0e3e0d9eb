#include "tchebi/matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace tchebi {

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Mat multiply: dimension mismatch");
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Mat subtract: dimension mismatch");
    Mat c(a.rows(), a.cols());
    for (size_t i = 0; i < a.data().size(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
    return c;
}

Mat transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = a.rows();
    Mat w = a;
    Mat inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(w(r, col)) > std::abs(w(pivot, col))) pivot = r;
        if (w(pivot, col) == 0.0) throw std::domain_error("inverse: singular matrix");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(w(pivot, j), w(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const double d = w(col, col);
        for (int j = 0; j < n; ++j) {
            w(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = w(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                w(r, j) -= f * w(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

IMat operator*(const IMat& a, const IMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IMat multiply: dimension mismatch");
    IMat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const int aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IMat transpose(const IMat& a) {
    IMat t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Mat to_mat(const IMat& a) {
    Mat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    return m;
}

double max_abs(const Mat& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

double frobenius_norm(const Mat& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

double inf_norm(const Mat& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        m = std::max(m, s);
    }
    return m;
}

}  // namespace tchebi
