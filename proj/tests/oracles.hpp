#pragma once
// Reference computations that share no code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <vector>

#include "rigidity/sym_matrix.hpp"

namespace oracle {

// Number of eigenvalues of a below x: negative pivots of the LDLᵀ
// factorisation of a − xI (Sylvester's law of inertia), no pivoting.
inline int count_below(const rigidity::SymMatrix& a, double x) {
    const int n = a.dim();
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i * n + j] = a(i, j) - (i == j ? x : 0.0);
    int negatives = 0;
    for (int k = 0; k < n; ++k) {
        double piv = m[k * n + k];
        if (piv == 0.0) piv = 1e-300;
        if (piv < 0.0) ++negatives;
        for (int i = k + 1; i < n; ++i) {
            const double f = m[i * n + k] / piv;
            for (int j = k + 1; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
        }
    }
    return negatives;
}

// Ascending eigenvalues by bisection on the inertia count.
inline std::vector<double> bisection_eigenvalues(const rigidity::SymMatrix& a) {
    const int n = a.dim();
    double bound = 0.0;  // Gershgorin
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        for (int j = 0; j < n; ++j) r += std::abs(a(i, j));
        bound = std::max(bound, r);
    }
    std::vector<double> out;
    for (int k = 0; k < n; ++k) {
        double lo = -bound - 1.0, hi = bound + 1.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + bound); ++it) {
            const double mid = 0.5 * (lo + hi);
            (count_below(a, mid) <= k ? lo : hi) = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

// σ_k as the sum over all k-subsets of products (2ⁿ terms).
inline std::vector<double> subset_sigma(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<double> sigma(static_cast<std::size_t>(n) + 1, 0.0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        double prod = 1.0;
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                prod *= x[i];
                ++k;
            }
        sigma[k] += prod;
    }
    return sigma;
}

}  // namespace oracle
