#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "internal/grid.hpp"
#include "rigidity/catalog.hpp"
#include "rigidity/error.hpp"
#include "rigidity/parallel.hpp"

namespace rigidity {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Determinant by Gaussian elimination with partial pivoting (m is consumed).
double determinant(std::vector<Vec> m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (m[piv][c] == 0.0) return 0.0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const double factor = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
        }
    }
    return det;
}

// Unit normal to the n columns of the (n+1)×n Jacobian: N_k = (−1)^k det(J without row k).
Vec generalized_cross(const std::vector<Vec>& columns) {
    const std::size_t n = columns.size();
    Vec normal(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Vec> minor(n, Vec(n));
        for (std::size_t r = 0, rr = 0; r <= n; ++r) {
            if (r == k) continue;
            for (std::size_t c = 0; c < n; ++c) minor[rr][c] = columns[c][r];
            ++rr;
        }
        normal[k] = (k % 2 == 0 ? 1.0 : -1.0) * determinant(std::move(minor));
    }
    const double len = std::sqrt(dot(normal, normal));
    if (!(len > 0.0)) fail(ErrorCode::DegenerateChart, "tangent vectors are linearly dependent");
    for (double& v : normal) v /= len;
    return normal;
}

struct PointResult {
    SymMatrix shape;
    double sqrt_det_g;
};

PointResult shape_at(const Chart& chart, const Vec& u, const Vec& steps, NormalOrientation orientation) {
    const int n = chart.n;
    auto eval = [&](const Vec& x) {
        Vec out = chart.map(x);
        if (static_cast<int>(out.size()) != n + 1) fail(ErrorCode::DimensionMismatch, "chart must map into R^{n+1}");
        return out;
    };
    auto shifted = [&](std::initializer_list<std::pair<int, double>> moves) {
        Vec x = u;
        for (auto [dir, amount] : moves) x[dir] += amount;
        return eval(x);
    };

    const Vec x0 = eval(u);
    std::vector<Vec> plus(n), minus(n), first(n);
    std::vector<std::vector<Vec>> second(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i) {
        plus[i] = shifted({{i, steps[i]}});
        minus[i] = shifted({{i, -steps[i]}});
        first[i].resize(n + 1);
        second[i][i].resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            first[i][k] = (plus[i][k] - minus[i][k]) / (2.0 * steps[i]);
            second[i][i][k] = (plus[i][k] - 2.0 * x0[k] + minus[i][k]) / (steps[i] * steps[i]);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vec pp = shifted({{i, steps[i]}, {j, steps[j]}});
            const Vec pm = shifted({{i, steps[i]}, {j, -steps[j]}});
            const Vec mp = shifted({{i, -steps[i]}, {j, steps[j]}});
            const Vec mm = shifted({{i, -steps[i]}, {j, -steps[j]}});
            Vec mixed(n + 1);
            for (int k = 0; k <= n; ++k) mixed[k] = (pp[k] - pm[k] - mp[k] + mm[k]) / (4.0 * steps[i] * steps[j]);
            second[i][j] = mixed;
            second[j][i] = mixed;
        }

    Vec normal = generalized_cross(first);
    if (orientation == NormalOrientation::TowardOrigin && dot(normal, x0) > 0.0) {
        for (double& v : normal) v = -v;
    }

    // g = JᵀJ = RᵀR with R upper triangular (Cholesky).
    std::vector<Vec> r(n, Vec(n, 0.0));
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, dot(first[i], first[i]));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= j; ++i) {
            double s = dot(first[i], first[j]);
            for (int k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
            if (i == j) {
                if (!(s > 1e-14 * max_diag)) fail(ErrorCode::DegenerateChart, "first fundamental form is singular");
                r[i][i] = std::sqrt(s);
            } else {
                r[i][j] = s / r[i][i];
            }
        }
    }

    // M = R⁻ᵀ II (forward substitution), then A = M R⁻¹, i.e. Aᵀ = R⁻ᵀ Mᵀ.
    std::vector<Vec> ii(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ii[i][j] = dot(second[i][j], normal);
    auto solve_lower = [&](const std::vector<Vec>& rhs) {
        std::vector<Vec> out(n, Vec(n));
        for (int col = 0; col < n; ++col)
            for (int i = 0; i < n; ++i) {
                double s = rhs[i][col];
                for (int k = 0; k < i; ++k) s -= r[k][i] * out[k][col];
                out[i][col] = s / r[i][i];
            }
        return out;
    };
    const std::vector<Vec> m = solve_lower(ii);
    std::vector<Vec> mt(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mt[i][j] = m[j][i];
    const std::vector<Vec> at = solve_lower(mt);

    SymMatrix shape(n);
    double sqrt_det = 1.0;
    for (int i = 0; i < n; ++i) {
        sqrt_det *= r[i][i];
        for (int j = i; j < n; ++j) shape.set(i, j, 0.5 * (at[i][j] + at[j][i]));
    }
    return {std::move(shape), sqrt_det};
}

// Point on S^m ⊂ R^{m+1} from m−1 polar angles and one azimuth.
Vec hyperspherical(std::span<const double> angles) {
    const std::size_t m = angles.size();
    Vec out(m + 1);
    double prod = 1.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        out[i] = prod * std::cos(angles[i]);
        prod *= std::sin(angles[i]);
    }
    out[m - 1] = prod * std::cos(angles[m - 1]);
    out[m] = prod * std::sin(angles[m - 1]);
    return out;
}

Vec angle_lower(int count) { return Vec(count, 0.0); }

Vec angle_upper(int count) {
    Vec up(count, std::numbers::pi);
    up.back() = 2.0 * std::numbers::pi;
    return up;
}

}  // namespace

double default_fd_step() { return std::pow(std::numeric_limits<double>::epsilon(), 0.25); }

ShapeField chart_shape_operator(const Chart& chart, std::vector<int> grid, const ChartOptions& options,
                                const Tolerances& tol) {
    const int n = chart.n;
    if (static_cast<int>(chart.lower.size()) != n || static_cast<int>(chart.upper.size()) != n) {
        fail(ErrorCode::BadParams, "chart domain must have n bounds");
    }
    if (!chart.map) fail(ErrorCode::BadParams, "chart has no map");

    ShapeField field;
    field.spec.kind = SurfaceKind::Chart;
    field.spec.n = n;
    field.spec.params = chart.params;
    field.spec.grid = detail::expand_grid(grid, n);
    field.spec.validate();
    const auto& g = field.spec.grid;

    const double rel = options.fd_step > 0.0 ? options.fd_step : default_fd_step();
    field.spec.params["fd_step"] = rel;
    Vec steps(n), half_steps(n);
    double cell = 1.0;
    for (int d = 0; d < n; ++d) {
        const double extent = chart.upper[d] - chart.lower[d];
        if (!(extent > 0.0)) fail(ErrorCode::BadParams, "chart domain bounds must be ordered");
        steps[d] = rel * extent;
        half_steps[d] = 0.5 * steps[d];
        cell *= extent / g[d];
    }

    const std::size_t total = detail::grid_size(g);
    std::vector<std::optional<SamplePoint>> slots(total);
    parallel_for(total, options.threads, [&](std::size_t index) {
        const auto idx = detail::unravel(index, g);
        Vec u(n);
        for (int d = 0; d < n; ++d) u[d] = detail::midpoint(chart.lower[d], chart.upper[d], g[d], idx[d]);
        PointResult pr = shape_at(chart, u, steps, options.orientation);
        if (options.self_check) {
            const PointResult fine = shape_at(chart, u, half_steps, options.orientation);
            const double diff = std::sqrt((pr.shape - fine.shape).frobenius_sq());
            const double bound = options.step_check_tol * std::max(1.0, std::sqrt(pr.shape.frobenius_sq()));
            if (diff > bound) {
                fail(ErrorCode::StepTooLarge, "sample " + std::to_string(index) +
                                                  ": shape operator changes by " + std::to_string(diff) +
                                                  " when the step is halved");
            }
        }
        const bool umb = is_umbilic(pr.shape, tol.umbilic);
        slots[index] = SamplePoint{u, std::move(pr.shape), pr.sqrt_det_g * cell, umb};
    });

    field.samples.reserve(total);
    for (auto& s : slots) field.samples.push_back(std::move(*s));
    return field;
}

Chart ellipsoid_chart(const std::vector<double>& semi_axes) {
    const int n = static_cast<int>(semi_axes.size()) - 1;
    Chart chart;
    chart.n = n;
    chart.lower = angle_lower(n);
    chart.upper = angle_upper(n);
    for (int i = 0; i <= n; ++i) chart.params["a" + std::to_string(i)] = semi_axes[i];
    chart.map = [semi_axes](std::span<const double> u) {
        Vec x = hyperspherical(u);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] *= semi_axes[i];
        return x;
    };
    return chart;
}

Chart sphere_chart(int n, double r) {
    Chart chart = ellipsoid_chart(Vec(n + 1, r));
    chart.params = {{"r", r}};
    return chart;
}

Chart cylinder_chart(int n, double r, double height) {
    Chart chart;
    chart.n = n;
    chart.lower = angle_lower(n);
    chart.upper = angle_upper(n);
    chart.lower[0] = -0.5 * height;
    chart.upper[0] = 0.5 * height;
    chart.params = {{"r", r}, {"height", height}};
    chart.map = [r](std::span<const double> u) {
        Vec x = hyperspherical(u.subspan(1));
        for (double& v : x) v *= r;
        x.push_back(u[0]);
        return x;
    };
    return chart;
}

Chart rotated_chart(const Chart& chart, const DenseMatrix& q) {
    Chart out = chart;
    out.map = [inner = chart.map, q](std::span<const double> u) {
        const Vec x = inner(u);
        Vec y(x.size(), 0.0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j) y[i] += q(static_cast<int>(i), static_cast<int>(j)) * x[j];
        return y;
    };
    return out;
}

}  // namespace rigidity
