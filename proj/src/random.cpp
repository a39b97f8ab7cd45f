#include "rigidity/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "rigidity/spectral.hpp"

namespace rigidity {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = (seed ^ index) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SymMatrix random_symmetric(int n, Rng& rng) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, rng.uniform(-1.0, 1.0));
    return m;
}

SymMatrix random_trace_free(int n, Rng& rng) { return trace_free_project(random_symmetric(n, rng)); }

DenseMatrix random_orthogonal(int n, Rng& rng) {
    DenseMatrix q = DenseMatrix::identity(n);
    const int count = 3 * n * n;
    for (int r = 0; r < count; ++r) {
        const int p = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        int s = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
        if (s >= p) ++s;
        const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const double c = std::cos(angle);
        const double sn = std::sin(angle);
        for (int k = 0; k < n; ++k) {
            const double a = q(p, k);
            const double b = q(s, k);
            q(p, k) = c * a - sn * b;
            q(s, k) = sn * a + c * b;
        }
    }
    return q;
}

SymMatrix equality_family_member(int n, double mu, Rng& rng) {
    std::vector<double> d(n, mu);
    d[n - 1] = -(n - 1) * mu;
    return conjugate(random_orthogonal(n, rng), SymMatrix::diagonal(d));
}

}  // namespace rigidity
