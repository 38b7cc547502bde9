// Dense row-major matrices and the ridge-regularized right-solve used by the
// autoencoder fits. Sizes here are small (tens to low hundreds), so plain
// O(n^3) LU with partial pivoting is all that is needed.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kaep {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    double operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    // Column-stacks the given vectors; all must share one dimension.
    static Matrix from_columns(const std::vector<std::vector<double>>& cols_in) {
        if (cols_in.empty()) throw std::invalid_argument("from_columns: empty set");
        const std::size_t d = cols_in.front().size();
        Matrix m(d, cols_in.size());
        for (std::size_t j = 0; j < cols_in.size(); ++j) {
            if (cols_in[j].size() != d)
                throw std::invalid_argument("from_columns: ragged input");
            for (std::size_t i = 0; i < d; ++i) m.at(i, j) = cols_in[j][i];
        }
        return m;
    }

    std::vector<double> column(std::size_t j) const {
        std::vector<double> c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
        return c;
    }
};

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matmul: inner dimension mismatch");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

inline double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data) s += v * v;
    return std::sqrt(s);
}

inline double trace(const Matrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("trace: matrix not square");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i) s += a.at(i, i);
    return s;
}

struct SingularMatrixError : std::runtime_error {
    double pivot;
    explicit SingularMatrixError(double p)
        : std::runtime_error("ridge_solve_right: singular system, pivot magnitude " +
                             std::to_string(p)),
          pivot(p) {}
};

// Scale-aware default regularizer for a Gram-type matrix B.
inline double default_ridge_lambda(const Matrix& b) {
    if (b.rows == 0) return 0.0;
    return 1e-6 * trace(b) / static_cast<double>(b.rows);
}

// Solves X (B + lambda I) = A for X, i.e. X = A (B + lambda I)^{-1},
// via LU of (B + lambda I)^T with partial pivoting. Never forms an inverse.
// Throws SingularMatrixError when a pivot falls below 1e-12 * ||B||_F.
inline Matrix ridge_solve_right(const Matrix& a, const Matrix& b, double lambda) {
    if (b.rows != b.cols)
        throw std::invalid_argument("ridge_solve_right: B must be square");
    if (a.cols != b.rows)
        throw std::invalid_argument("ridge_solve_right: A cols must match B order");
    if (lambda < 0.0)
        throw std::invalid_argument("ridge_solve_right: negative lambda");

    const std::size_t n = b.rows;
    const double pivot_floor = 1e-12 * frobenius_norm(b);

    // c = (B + lambda I)^T
    Matrix c = transpose(b);
    for (std::size_t i = 0; i < n; ++i) c.at(i, i) += lambda;

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::fabs(c.at(perm[k], k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::fabs(c.at(perm[i], k));
            if (v > best) { best = v; p = i; }
        }
        if (best <= pivot_floor || best == 0.0) throw SingularMatrixError(best);
        std::swap(perm[k], perm[p]);
        const double piv = c.at(perm[k], k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = c.at(perm[i], k) / piv;
            c.at(perm[i], k) = f;
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j)
                c.at(perm[i], j) -= f * c.at(perm[k], j);
        }
    }

    // Each row of A is a right-hand side: c * x_row^T = a_row^T.
    Matrix x(a.rows, n);
    std::vector<double> z(n);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = a.at(r, perm[i]);
            for (std::size_t j = 0; j < i; ++j) s -= c.at(perm[i], j) * z[j];
            z[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            double s = z[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= c.at(perm[i], j) * x.at(r, j);
            x.at(r, i) = s / c.at(perm[i], i);
        }
    }
    return x;
}

}  // namespace kaep
