#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/sym_matrix.hpp"
#include "rigidity/tolerances.hpp"

namespace rigidity {

/// Å = A − (tr A / n)·I.
SymMatrix trace_free_project(const SymMatrix& a);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    DenseMatrix vectors;         // column j is the unit eigenvector of values[j]
    int rotations = 0;
};

struct JacobiOptions {
    double off_tolerance = Tolerances{}.jacobi_off;
    /// Rotation budget is budget_factor · n².
    int budget_factor = 50;
};

/// Cyclic Jacobi. Throws NonConvergence when the rotation budget runs out.
EigenDecomposition jacobi_eigen(const SymMatrix& a, const JacobiOptions& options = {});

struct Spectrum {
    std::vector<double> eigenvalues;        // ascending
    std::vector<std::vector<int>> clusters;  // indices into eigenvalues, each run contiguous
    double cluster_tolerance = 0.0;

    int dim() const { return static_cast<int>(eigenvalues.size()); }
    double spectral_radius() const;
    int max_multiplicity() const;
    std::vector<int> multiplicities() const;
};

/// Single-linkage clustering of sorted eigenvalues: neighbours whose gap is at
/// most cluster_tol · max(1, spectral radius) share a cluster.
Spectrum make_spectrum(std::vector<double> eigenvalues, double cluster_tol);

Spectrum eigen_spectrum(const SymMatrix& a, double cluster_tol = Tolerances{}.cluster);

/// σ_0..σ_n, p_0..p_n and power sums s_1..s_n of one matrix.
struct SymFunProfile {
    int n = 0;
    std::vector<double> sigma;
    std::vector<double> p;
    std::vector<double> power_sums;  // power_sums[j - 1] = s_j

    double s(int j) const { return power_sums.at(static_cast<std::size_t>(j - 1)); }
};

/// binom(n, k) for 0 <= k <= n <= 64, exact in integer arithmetic before conversion.
double binomial(int n, int k);

SymFunProfile symfun_from_spectrum(const Spectrum& spec);
SymFunProfile symfun_from_eigenvalues(const std::vector<double>& eigenvalues);

/// Newton's identities on s_j = tr Aʲ; never touches an eigensolver.
SymFunProfile symfun_from_power_sums(const SymMatrix& a);

/// Profile of A + λI from the profile of A alone.
SymFunProfile shift_profile(const SymFunProfile& profile, double lambda);

struct MatrixNorms {
    double norm_sq = 0.0;         // |A|²
    double square_norm_sq = 0.0;  // |A²|²
    double trace_cube = 0.0;      // tr A³
    double trace = 0.0;
};

MatrixNorms norms(const SymMatrix& a);

}  // namespace rigidity
