#pragma once

#include <array>
#include <vector>

#include "rigidity/sym_matrix.hpp"
#include "rigidity/tolerances.hpp"

namespace rigidity {

// Pointwise tensor algebra in an orthonormal frame, so g is the identity and
// a symmetric bilinear form is just its symmetric matrix.
using SymBilinear = SymMatrix;

/// Rank-4 tensor stored flat as n⁴ entries, index (a,b,c,d) row-major.
class AlgCurvTensor {
public:
    explicit AlgCurvTensor(int n);

    int dim() const { return n_; }
    double& operator()(int a, int b, int c, int d) { return t_[index(a, b, c, d)]; }
    double operator()(int a, int b, int c, int d) const { return t_[index(a, b, c, d)]; }

    /// Σ T_abcd², no combinatorial prefactor.
    double norm_sq() const;
    double inner(const AlgCurvTensor& other) const;
    double max_abs() const;

    /// max over entries of the antisymmetry and pair-symmetry violations.
    double symmetry_residual() const;
    /// max |T_abcd + T_bcad + T_cabd|.
    double bianchi_residual() const;
    /// max |Σ_a T_abad|, the contraction on first and third indices.
    double trace_residual() const;

    AlgCurvTensor& operator+=(const AlgCurvTensor& rhs);
    AlgCurvTensor& operator*=(double s);

private:
    std::size_t index(int a, int b, int c, int d) const {
        return ((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_ + d;
    }

    int n_;
    std::vector<double> t_;
};

/// (S∧T)_abcd = S_ac T_bd + S_bd T_ac − S_ad T_bc − S_bc T_ad.
AlgCurvTensor kulkarni_nomizu(const SymBilinear& s, const SymBilinear& t);

struct Fialkow {
    SymBilinear tensor;  // F = (Å² − G·g)/(n − 2)
    double trace = 0.0;  // G = |Å|²/(2(n − 1))
};

Fialkow fialkow_tensor(const SymMatrix& traceless, const Tolerances& tol = {});

/// W = ½ Å∧Å + F∧g.
AlgCurvTensor weyl_from_gauss_codazzi(const SymMatrix& traceless, const Tolerances& tol = {});

/// 2(n²−3n+3)/((n−1)(n−2)) |Å|⁴ − 2n/(n−2) |Å²|².
double weyl_norm_closed_form(double norm_sq, double square_norm_sq, int n);

struct KnIdentityResiduals {
    // |Å∧Å|² − (8|Å|⁴ − 8|Å²|²)
    // ⟨Å∧Å, F∧g⟩ + 8⟨Å², F⟩
    // |F∧g|² − 4⟨Å², F⟩
    // ⟨Å², F⟩ − (|Å²|²/(n−2) − |Å|⁴/(2(n−1)(n−2)))
    std::array<double, 4> residuals{};
    double scale = 1.0;  // max(1, |Å|⁴)
};

KnIdentityResiduals kn_identity_suite(const SymMatrix& traceless, const Tolerances& tol = {});

}  // namespace rigidity
