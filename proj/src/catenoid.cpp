#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "internal/grid.hpp"
#include "internal/rotation_sample.hpp"
#include "rigidity/catalog.hpp"
#include "rigidity/error.hpp"

namespace rigidity {

namespace {

using State = std::array<double, 2>;  // (f, f')

State rhs(int n, const State& y) { return {y[1], (n - 1) * (1.0 + y[1] * y[1]) / y[0]}; }

State axpy(const State& y, double h, const State& k) { return {y[0] + h * k[0], y[1] + h * k[1]}; }

// RK4 nodes y(k·h), k = 0..count−1, from the waist f(0) = 1, f'(0) = 0.
std::vector<State> integrate_profile(int n, double h, std::size_t count) {
    std::vector<State> nodes;
    nodes.reserve(count);
    State y{1.0, 0.0};
    nodes.push_back(y);
    while (nodes.size() < count) {
        const State k1 = rhs(n, y);
        const State k2 = rhs(n, axpy(y, 0.5 * h, k1));
        const State k3 = rhs(n, axpy(y, 0.5 * h, k2));
        const State k4 = rhs(n, axpy(y, h, k3));
        y = {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
             y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
        if (!std::isfinite(y[0]) || !std::isfinite(y[1]) || !(y[0] > 0.0)) {
            fail(ErrorCode::ODEStepFailure, "catenoid profile left the finite range at t=" +
                                                std::to_string(h * static_cast<double>(nodes.size())));
        }
        nodes.push_back(y);
    }
    return nodes;
}

void check_extent(double extent_fraction) {
    if (!(extent_fraction > 0.0 && extent_fraction < 1.0)) {
        fail(ErrorCode::BadParams, "catenoid extent fraction must lie in (0, 1)");
    }
}

}  // namespace

double catenoid_half_height(int n) {
    const double m = n - 1;
    const double a = 0.5 - 0.5 / m;
    // B(a, ½) = Γ(a)Γ(½)/Γ(a + ½)
    const double beta = std::tgamma(a) * std::sqrt(std::numbers::pi) / std::tgamma(a + 0.5);
    return beta / (2.0 * m);
}

ShapeField build_catenoid_fixed_step(int n, std::vector<int> grid, int substeps, double extent_fraction,
                                     const Tolerances& tol) {
    check_extent(extent_fraction);
    if (substeps < 1) fail(ErrorCode::BadParams, "substeps must be >= 1");

    ShapeField field;
    field.spec.kind = SurfaceKind::Catenoid;
    field.spec.n = n;
    field.spec.grid = detail::expand_grid(grid, 2);
    field.spec.validate();
    const auto& g = field.spec.grid;

    const double half = extent_fraction * catenoid_half_height(n);
    const double dt = 2.0 * half / g[0];
    const double h = dt / (2.0 * substeps);
    field.spec.params = {{"extent_fraction", extent_fraction}, {"half_height", half},
                         {"substeps", static_cast<double>(substeps)}, {"step", h}};

    // Sample midpoints are integer multiples of h; two extra nodes feed the
    // five-point stencil at the outermost samples.
    const auto last = static_cast<std::size_t>(std::llround(half / h));
    const std::vector<State> nodes = integrate_profile(n, h, last + 3);
    auto slope = [&](long k) { return k >= 0 ? nodes[static_cast<std::size_t>(k)][1] : -nodes[static_cast<std::size_t>(-k)][1]; };

    const double cell = dt * (std::numbers::pi / g[1]);
    field.samples.reserve(detail::grid_size(g));
    for (int i = 0; i < g[0]; ++i) {
        const double t = detail::midpoint(-half, half, g[0], i);
        const long k = std::lround(std::abs(t) / h);
        const double f = nodes[static_cast<std::size_t>(k)][0];
        const double df = (t < 0.0 ? -1.0 : 1.0) * nodes[static_cast<std::size_t>(k)][1];
        const double d2f = (-slope(k + 2) + 8.0 * slope(k + 1) - 8.0 * slope(k - 1) + slope(k - 2)) / (12.0 * h);
        for (int j = 0; j < g[1]; ++j) {
            const double theta = detail::midpoint(0.0, std::numbers::pi, g[1], j);
            field.samples.push_back(detail::make_rotation_sample(n, t, theta, cell, f, df, d2f, tol));
        }
    }
    return field;
}

ShapeField build_catenoid(int n, std::vector<int> grid, const CatenoidOptions& options, const Tolerances& tol) {
    if (!(options.profile_tol > 0.0)) fail(ErrorCode::BadParams, "profile tolerance must be positive");
    if (options.initial_substeps < 1 || options.max_substeps < options.initial_substeps) {
        fail(ErrorCode::BadParams, "invalid substep range");
    }
    double residual = 0.0;
    for (int m = options.initial_substeps; m <= options.max_substeps; m *= 2) {
        ShapeField field = build_catenoid_fixed_step(n, grid, m, options.extent_fraction, tol);
        residual = minimality_residual(field);
        if (residual <= options.profile_tol) {
            field.minimal_claimed = true;
            field.spec.params["profile_tol"] = options.profile_tol;
            return field;
        }
    }
    fail(ErrorCode::ODEStepFailure, "minimality residual " + std::to_string(residual) + " above profile tolerance " +
                                        std::to_string(options.profile_tol) + " at the finest step");
}

Profile catenoid_profile(int n, double extent_fraction, double step) {
    check_extent(extent_fraction);
    if (!(step > 0.0)) fail(ErrorCode::BadParams, "step must be positive");
    const double half = extent_fraction * catenoid_half_height(n);
    const auto count = static_cast<std::size_t>(std::ceil(half / step)) + 2;
    auto nodes = std::make_shared<const std::vector<State>>(integrate_profile(n, step, count));

    // Cubic Hermite on |t| between nodes; f is even, f' odd.
    auto hermite = [nodes, step](double t, bool derivative) {
        const double at = std::abs(t);
        auto k = static_cast<std::size_t>(at / step);
        if (k + 1 >= nodes->size()) k = nodes->size() - 2;
        const double s = at / step - static_cast<double>(k);
        const auto& y0 = (*nodes)[k];
        const auto& y1 = (*nodes)[k + 1];
        if (!derivative) {
            const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
            const double h10 = s * (1 - s) * (1 - s);
            const double h01 = s * s * (3 - 2 * s);
            const double h11 = s * s * (s - 1);
            return h00 * y0[0] + h10 * step * y0[1] + h01 * y1[0] + h11 * step * y1[1];
        }
        const double d00 = 6 * s * s - 6 * s;
        const double d10 = 3 * s * s - 4 * s + 1;
        const double d01 = -6 * s * s + 6 * s;
        const double d11 = 3 * s * s - 2 * s;
        const double slope = (d00 * y0[0] + d01 * y1[0]) / step + d10 * y0[1] + d11 * y1[1];
        return t < 0.0 ? -slope : slope;
    };

    Profile p;
    p.t_min = -half;
    p.t_max = half;
    p.params = {{"extent_fraction", extent_fraction}, {"step", step}};
    p.f = [hermite](double t) { return hermite(t, false); };
    p.df = [hermite](double t) { return hermite(t, true); };
    p.d2f = [hermite, n](double t) {
        const double f = hermite(t, false);
        const double df = hermite(t, true);
        return (n - 1) * (1.0 + df * df) / f;
    };
    return p;
}

}  // namespace rigidity
