#include "rigidity/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {

namespace {

void check_dim(int n) {
    if (n < kMinDim || n > kMaxDim) {
        fail(ErrorCode::BadDimension, "matrix dimension " + std::to_string(n) + " outside [" +
                                          std::to_string(kMinDim) + ", " + std::to_string(kMaxDim) + "]");
    }
}

}  // namespace

DenseMatrix::DenseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    DenseMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

SymMatrix::SymMatrix(int n) : n_(n) {
    check_dim(n);
    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
    SymMatrix m(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    check_dim(n);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) fail(ErrorCode::BadDimension, "matrix is not square");
    }
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (rows[i][j] != rows[j][i]) {
                fail(ErrorCode::InvariantViolation, "matrix not symmetric at (" + std::to_string(i) + "," +
                                                        std::to_string(j) + ")");
            }
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

SymMatrix SymMatrix::symmetric_part(const DenseMatrix& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::BadDimension, "symmetric part of non-square matrix");
    SymMatrix s(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.rows(); ++j) s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    return s;
}

void SymMatrix::set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
}

std::vector<std::vector<double>> SymMatrix::rows() const {
    std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

DenseMatrix SymMatrix::dense() const {
    DenseMatrix d(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) d(i, j) = (*this)(i, j);
    return d;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

double SymMatrix::frobenius_sq() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return s;
}

SymMatrix SymMatrix::square() const {
    SymMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            double s = 0.0;
            for (int k = 0; k < n_; ++k) s += (*this)(i, k) * (*this)(k, j);
            out.set(i, j, s);
        }
    return out;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
    if (rhs.n_ != n_) fail(ErrorCode::DimensionMismatch, "matrix sum dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& rhs) {
    if (rhs.n_ != n_) fail(ErrorCode::DimensionMismatch, "matrix difference dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
}

SymMatrix conjugate(const DenseMatrix& q, const SymMatrix& a) {
    const int n = a.dim();
    if (q.rows() != n || q.cols() != n) fail(ErrorCode::DimensionMismatch, "conjugation shape mismatch");
    DenseMatrix qa(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double qik = q(i, k);
            for (int j = 0; j < n; ++j) qa(i, j) += qik * a(k, j);
        }
    SymMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += qa(i, k) * q(j, k);
            out.set(i, j, s);
        }
    return out;
}

double frobenius_inner(const SymMatrix& s, const SymMatrix& t) {
    if (s.dim() != t.dim()) fail(ErrorCode::DimensionMismatch, "inner product dimension mismatch");
    double acc = 0.0;
    const auto a = s.data();
    const auto b = t.data();
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace rigidity
