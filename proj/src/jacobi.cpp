#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rigidity/error.hpp"
#include "rigidity/spectral.hpp"

namespace rigidity {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymMatrix& sym, const JacobiOptions& options) {
    const int n = sym.dim();
    DenseMatrix a = sym.dense();
    DenseMatrix v = DenseMatrix::identity(n);

    const double initial = std::sqrt(sym.frobenius_sq());
    const double threshold = options.off_tolerance * initial;
    const long budget = static_cast<long>(options.budget_factor) * n * n;
    long rotations = 0;

    while (initial > 0.0 && off_diagonal_norm(a) >= threshold) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                if (++rotations > budget) {
                    fail(ErrorCode::NonConvergence,
                         "Jacobi exceeded rotation budget of " + std::to_string(budget) + " for n=" + std::to_string(n));
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n, n);
    out.rotations = static_cast<int>(rotations);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (int k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
    }
    return out;
}

}  // namespace rigidity
