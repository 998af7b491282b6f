#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace hdvol::linalg {

/// Dense column-major matrix. Column j is the j-th point / vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<std::vector<double>>& columns);
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<double> column(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
    std::span<const double> column(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    Matrix transposed() const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// ln|det| and sign. sign == 0 exactly when the matrix is singular, in
/// which case log_abs is -infinity.
struct LogDetResult {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;

    bool singular() const { return sign == 0; }
};

/// Row-pivoted LU on a copy of `m` (pass an rvalue to factor in place).
/// Singular only when every pivot candidate in some column is exactly zero.
/// Throws InputError for non-square or non-finite input.
LogDetResult log_abs_det(Matrix m);

/// Unit normal to the hyperplane spanned by the n columns of an (n+1) x n
/// matrix. The sign is not specified. Throws DegenerateSubspaceError when the
/// columns are (numerically) linearly dependent.
std::vector<double> unit_normal(const Matrix& vectors);

/// unit_normal oriented so that det(vectors | N) > 0. The augmented
/// determinant doubles as an exact singularity check.
std::vector<double> oriented_unit_normal(const Matrix& vectors);

/// |<v, normal>|, the distance from v to the hyperplane with unit normal
/// `normal`. Throws InputError if |‖normal‖ - 1| > 1e-10 or sizes differ.
double dist_to_subspace(std::span<const double> v, std::span<const double> normal);

}  // namespace hdvol::linalg
