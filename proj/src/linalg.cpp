#include "hdvol/linalg.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "hdvol/error.hpp"
#include "hdvol/kernels.hpp"

namespace hdvol::linalg {
namespace {

// Columns whose residual after orthogonalization falls below this fraction
// of their original norm are treated as dependent.
constexpr double kRankTolerance = 1e-10;

void orthogonalize(std::span<double> v, const Matrix& basis, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
        const auto q = basis.column(j);
        kernels::axpy(-kernels::dot(q, v), q, v);
    }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<double>>& columns) {
    if (columns.empty()) {
        return {};
    }
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.rows()) {
            throw InputError("Matrix::from_columns: ragged columns");
        }
        std::copy(columns[c].begin(), columns[c].end(), m.column(c).begin());
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        return {};
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) {
            throw InputError("Matrix::from_rows: ragged rows");
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        for (std::size_t r = 0; r < rows_; ++r) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

LogDetResult log_abs_det(Matrix m) {
    if (!m.square()) {
        throw InputError("log_abs_det: matrix is not square");
    }
    if (!m.all_finite()) {
        throw InputError("log_abs_det: non-finite entry");
    }
    const std::size_t n = m.rows();
    const auto& k = kernels::active();
    double* a = m.data().data();

    // product of pivots kept as mantissa * 2^exponent
    double mantissa = 1.0;
    long exponent = 0;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        double* colk = a + col * n;
        const std::size_t len = n - col;
        const std::size_t piv = col + k.argmax_abs(colk + col, len);
        const double pivot = colk[piv];
        if (pivot == 0.0) {
            return {};
        }
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) {
                std::swap(a[j * n + col], a[j * n + piv]);
            }
            sign = -sign;
        }
        if (pivot < 0.0) {
            sign = -sign;
        }
        int e = 0;
        mantissa *= std::frexp(std::fabs(pivot), &e);
        exponent += e;
        int renorm = 0;
        mantissa = std::frexp(mantissa, &renorm);
        exponent += renorm;

        if (len > 1) {
            double* multipliers = colk + col + 1;
            k.scale(1.0 / pivot, multipliers, len - 1);
            for (std::size_t j = col + 1; j < n; ++j) {
                double* colj = a + j * n;
                const double head = colj[col];
                if (head != 0.0) {
                    k.axpy(-head, multipliers, colj + col + 1, len - 1);
                }
            }
        }
    }
    return {std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2, sign};
}

std::vector<double> unit_normal(const Matrix& vectors) {
    const std::size_t dim = vectors.rows();
    const std::size_t count = vectors.cols();
    if (dim != count + 1) {
        throw InputError("unit_normal: expected n vectors in (n+1)-space");
    }
    if (!vectors.all_finite()) {
        throw InputError("unit_normal: non-finite entry");
    }

    // orthonormal basis of the span, Gram–Schmidt with one re-orthogonalization
    Matrix basis(dim, count);
    for (std::size_t i = 0; i < count; ++i) {
        auto v = basis.column(i);
        const auto src = vectors.column(i);
        std::copy(src.begin(), src.end(), v.begin());
        const double original = std::sqrt(kernels::dot(v, v));
        orthogonalize(v, basis, i);
        orthogonalize(v, basis, i);
        const double residual = std::sqrt(kernels::dot(v, v));
        if (!(residual > kRankTolerance * original)) {
            throw DegenerateSubspaceError("unit_normal: input vectors are linearly dependent");
        }
        kernels::scale(1.0 / residual, v);
    }

    // e_j with the largest component outside the span: 1 - ‖row j of basis‖²
    std::size_t best = 0;
    double best_residual = -1.0;
    for (std::size_t r = 0; r < dim; ++r) {
        double row_norm2 = 0.0;
        for (std::size_t c = 0; c < count; ++c) {
            row_norm2 += basis(r, c) * basis(r, c);
        }
        if (1.0 - row_norm2 > best_residual) {
            best_residual = 1.0 - row_norm2;
            best = r;
        }
    }

    std::vector<double> normal(dim, 0.0);
    normal[best] = 1.0;
    orthogonalize(normal, basis, count);
    orthogonalize(normal, basis, count);
    const double norm = std::sqrt(kernels::dot(normal, normal));
    kernels::scale(1.0 / norm, normal);
    return normal;
}

std::vector<double> oriented_unit_normal(const Matrix& vectors) {
    std::vector<double> normal = unit_normal(vectors);
    Matrix augmented(vectors.rows(), vectors.cols() + 1);
    std::copy(vectors.data().begin(), vectors.data().end(), augmented.data().begin());
    std::copy(normal.begin(), normal.end(), augmented.column(vectors.cols()).begin());
    const LogDetResult det = log_abs_det(std::move(augmented));
    if (det.singular()) {
        throw DegenerateSubspaceError("oriented_unit_normal: augmented matrix is singular");
    }
    if (det.sign < 0) {
        for (double& v : normal) {
            v = -v;
        }
    }
    return normal;
}

double dist_to_subspace(std::span<const double> v, std::span<const double> normal) {
    if (v.size() != normal.size()) {
        throw InputError("dist_to_subspace: dimension mismatch");
    }
    const double norm = std::sqrt(kernels::scalar::dot(normal.data(), normal.data(), normal.size()));
    if (!(std::fabs(norm - 1.0) <= 1e-10)) {
        throw InputError("dist_to_subspace: normal is not a unit vector");
    }
    return std::fabs(kernels::dot(v, normal));
}

}  // namespace hdvol::linalg
