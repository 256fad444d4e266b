#pragma once

#include <cstddef>
#include <vector>

namespace trpoly {

/// Minimal dense row-major matrix; just enough for the pencil work.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<double> operator*(const std::vector<double>& v) const {
        std::vector<double> out(rows_, 0.0);
        for (int i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

}  // namespace trpoly
