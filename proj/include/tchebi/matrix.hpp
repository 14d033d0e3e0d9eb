#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tchebi {

// Dense row-major matrix of doubles. Small fixed sizes throughout (N <= 64),
// so no attempt at blocking or expression templates.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("Mat: dimensions must be positive");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool operator==(const Mat& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Integer matrix for the low-complexity transforms and factorization stages.
class IMat {
public:
    IMat() = default;
    IMat(int rows, int cols, int fill = 0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("IMat: dimensions must be positive");
    }
    IMat(std::initializer_list<std::initializer_list<int>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ > 0 ? static_cast<int>(init.begin()->size()) : 0;
        data_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw std::invalid_argument("IMat: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    int operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const IMat& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);

// Gauss-Jordan with partial pivoting; throws std::domain_error on singular input.
Mat inverse(const Mat& a);

IMat operator*(const IMat& a, const IMat& b);
IMat transpose(const IMat& a);
Mat to_mat(const IMat& a);

double max_abs(const Mat& a);
double frobenius_norm(const Mat& a);
// Max absolute row sum.
double inf_norm(const Mat& a);

}  // namespace tchebi
