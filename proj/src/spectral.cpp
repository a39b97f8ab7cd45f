#include "rigidity/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {

SymMatrix trace_free_project(const SymMatrix& a) {
    const int n = a.dim();
    const double mean = a.trace() / n;
    SymMatrix out = a;
    for (int i = 0; i < n; ++i) out.set(i, i, a(i, i) - mean);
    return out;
}

double Spectrum::spectral_radius() const {
    double r = 0.0;
    for (double v : eigenvalues) r = std::max(r, std::abs(v));
    return r;
}

int Spectrum::max_multiplicity() const {
    std::size_t m = 0;
    for (const auto& c : clusters) m = std::max(m, c.size());
    return static_cast<int>(m);
}

std::vector<int> Spectrum::multiplicities() const {
    std::vector<int> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) out.push_back(static_cast<int>(c.size()));
    return out;
}

Spectrum make_spectrum(std::vector<double> eigenvalues, double cluster_tol) {
    if (!(cluster_tol > 0.0)) fail(ErrorCode::BadParams, "cluster tolerance must be positive");
    std::sort(eigenvalues.begin(), eigenvalues.end());
    Spectrum spec;
    spec.eigenvalues = std::move(eigenvalues);
    spec.cluster_tolerance = cluster_tol;
    const double gap = cluster_tol * std::max(1.0, spec.spectral_radius());
    for (int i = 0; i < spec.dim(); ++i) {
        if (i == 0 || spec.eigenvalues[i] - spec.eigenvalues[i - 1] > gap) spec.clusters.emplace_back();
        spec.clusters.back().push_back(i);
    }
    return spec;
}

Spectrum eigen_spectrum(const SymMatrix& a, double cluster_tol) {
    if (!(cluster_tol > 0.0)) fail(ErrorCode::BadParams, "cluster tolerance must be positive");
    return make_spectrum(jacobi_eigen(a).values, cluster_tol);
}

double binomial(int n, int k) {
    if (n < 0 || n > kMaxDim || k < 0 || k > n) {
        fail(ErrorCode::BadIndex, "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kMaxDim + 1>, kMaxDim + 1> t{};
        for (int i = 0; i <= kMaxDim; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
        }
        return t;
    }();
    return static_cast<double>(table[n][k]);
}

namespace {

void fill_normalized(SymFunProfile& prof) {
    prof.p.resize(prof.n + 1);
    for (int k = 0; k <= prof.n; ++k) prof.p[k] = prof.sigma[k] / binomial(prof.n, k);
}

}  // namespace

SymFunProfile symfun_from_eigenvalues(const std::vector<double>& eigenvalues) {
    SymFunProfile prof;
    prof.n = static_cast<int>(eigenvalues.size());
    // Coefficients of ∏(x + λ_i), multiplied out one root at a time.
    prof.sigma.assign(prof.n + 1, 0.0);
    prof.sigma[0] = 1.0;
    for (int i = 0; i < prof.n; ++i) {
        const double lambda = eigenvalues[i];
        for (int k = i + 1; k >= 1; --k) prof.sigma[k] += lambda * prof.sigma[k - 1];
    }
    fill_normalized(prof);

    prof.power_sums.assign(prof.n, 0.0);
    for (double lambda : eigenvalues) {
        double pw = 1.0;
        for (int j = 0; j < prof.n; ++j) {
            pw *= lambda;
            prof.power_sums[j] += pw;
        }
    }
    return prof;
}

SymFunProfile symfun_from_spectrum(const Spectrum& spec) { return symfun_from_eigenvalues(spec.eigenvalues); }

SymFunProfile symfun_from_power_sums(const SymMatrix& a) {
    // The recurrence cancels terms up to ~binom(n, k/2)·ρ^k down to σ_k, so
    // powers, traces and the recurrence all run in extended precision.
    using ext = long double;
    const int n = a.dim();
    const auto un = static_cast<std::size_t>(n);
    std::vector<ext> base(un * un), power, next(un * un);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) base[i * un + j] = a(i, j);
    power = base;

    std::vector<ext> s(un, 0.0L);
    for (int p = 1; p <= n; ++p) {
        if (p > 1) {
            for (std::size_t i = 0; i < un; ++i)
                for (std::size_t j = 0; j < un; ++j) {
                    ext acc = 0.0L;
                    for (std::size_t k = 0; k < un; ++k) acc += power[i * un + k] * base[k * un + j];
                    next[i * un + j] = acc;
                }
            power.swap(next);
        }
        ext tr = 0.0L;
        for (std::size_t i = 0; i < un; ++i) tr += power[i * un + i];
        s[p - 1] = tr;
    }

    std::vector<ext> sigma(un + 1, 0.0L);
    sigma[0] = 1.0L;
    for (int k = 1; k <= n; ++k) {
        ext acc = 0.0L;
        for (int j = 1; j <= k; ++j) {
            const ext term = sigma[k - j] * s[j - 1];
            acc += (j % 2 == 1) ? term : -term;
        }
        sigma[k] = acc / k;
    }

    SymFunProfile prof;
    prof.n = n;
    prof.power_sums.assign(s.begin(), s.end());
    prof.sigma.assign(sigma.begin(), sigma.end());
    fill_normalized(prof);
    return prof;
}

SymFunProfile shift_profile(const SymFunProfile& profile, double lambda) {
    const int n = profile.n;
    SymFunProfile out;
    out.n = n;
    out.p.assign(n + 1, 0.0);
    out.sigma.assign(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double acc = 0.0;
        double lp = 1.0;
        for (int j = 0; j <= k; ++j) {
            acc += binomial(k, j) * lp * profile.p[k - j];
            lp *= lambda;
        }
        out.p[k] = acc;
        out.sigma[k] = binomial(n, k) * acc;
    }
    // s_j(A + λI) = Σ_m binom(j, m) λ^{j−m} s_m(A), with s_0 = n.
    out.power_sums.assign(n, 0.0);
    for (int j = 1; j <= n; ++j) {
        double acc = 0.0;
        for (int m = 0; m <= j; ++m) {
            const double sm = (m == 0) ? static_cast<double>(n) : profile.power_sums[m - 1];
            acc += binomial(j, m) * std::pow(lambda, j - m) * sm;
        }
        out.power_sums[j - 1] = acc;
    }
    return out;
}

MatrixNorms norms(const SymMatrix& a) {
    const SymMatrix sq = a.square();
    MatrixNorms out;
    out.norm_sq = a.frobenius_sq();
    out.square_norm_sq = sq.frobenius_sq();
    out.trace_cube = frobenius_inner(sq, a);
    out.trace = a.trace();
    return out;
}

}  // namespace rigidity
