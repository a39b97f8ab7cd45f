#pragma once

#include <span>
#include <vector>

namespace rigidity {

inline constexpr int kMinDim = 3;
inline constexpr int kMaxDim = 64;

/// Dense row-major rectangular matrix. Used for orthogonal frames,
/// eigenvector bases and chart Jacobians; symmetric data lives in SymMatrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols);

    static DenseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    DenseMatrix transposed() const;
    DenseMatrix operator*(const DenseMatrix& rhs) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

/// Real symmetric n×n matrix, 3 <= n <= 64. Symmetry is exact: every
/// mutation writes both (i,j) and (j,i).
class SymMatrix {
public:
    explicit SymMatrix(int n);

    static SymMatrix identity(int n);
    static SymMatrix diagonal(std::span<const double> d);
    /// Rejects ragged or non-square input (BadDimension) and any entry with
    /// rows[i][j] != rows[j][i] (InvariantViolation).
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    /// Symmetric part (M + Mᵀ)/2 of a square dense matrix.
    static SymMatrix symmetric_part(const DenseMatrix& m);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double v);

    std::span<const double> data() const { return a_; }
    std::vector<std::vector<double>> rows() const;
    DenseMatrix dense() const;

    double trace() const;
    double max_abs() const;
    double frobenius_sq() const;

    /// A², exactly symmetric.
    SymMatrix square() const;

    SymMatrix& operator+=(const SymMatrix& rhs);
    SymMatrix& operator-=(const SymMatrix& rhs);
    SymMatrix& operator*=(double s);

    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(SymMatrix a, double s) { return a *= s; }
    friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

    bool operator==(const SymMatrix& other) const = default;

private:
    int n_;
    std::vector<double> a_;
};

/// Q·A·Qᵀ, with the upper triangle mirrored so the result is exactly symmetric.
SymMatrix conjugate(const DenseMatrix& q, const SymMatrix& a);

/// Σ_ij S_ij T_ij.
double frobenius_inner(const SymMatrix& s, const SymMatrix& t);

}  // namespace rigidity
