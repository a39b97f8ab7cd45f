#include "rigidity/catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "internal/grid.hpp"
#include "internal/rotation_sample.hpp"
#include "rigidity/error.hpp"
#include "rigidity/spectral.hpp"

namespace rigidity {

std::string_view to_string(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::Sphere: return "Sphere";
        case SurfaceKind::Cylinder: return "Cylinder";
        case SurfaceKind::RotationHypersurface: return "RotationHypersurface";
        case SurfaceKind::Catenoid: return "Catenoid";
        case SurfaceKind::Chart: return "Chart";
        case SurfaceKind::FieldFile: return "FieldFile";
    }
    return "FieldFile";
}

SurfaceKind surface_kind_from_string(std::string_view name) {
    for (auto k : {SurfaceKind::Sphere, SurfaceKind::Cylinder, SurfaceKind::RotationHypersurface,
                   SurfaceKind::Catenoid, SurfaceKind::Chart, SurfaceKind::FieldFile}) {
        if (to_string(k) == name) return k;
    }
    fail(ErrorCode::SchemaError, "unknown surface kind '" + std::string(name) + "'");
}

void SurfaceSpec::validate() const {
    if (n < 4 || n > kMaxDim) fail(ErrorCode::BadParams, "hypersurface dimension must be in [4, 64], got " + std::to_string(n));
    for (int g : grid) {
        if (g < 2) fail(ErrorCode::BadParams, "grid counts must be >= 2");
    }
    for (const auto& [key, value] : params) {
        if (!std::isfinite(value)) fail(ErrorCode::BadParams, "parameter '" + key + "' is not finite");
        const bool positive = key == "r" || key == "height" || (key.size() >= 2 && key[0] == 'a' && std::isdigit(key[1]));
        if (positive && !(value > 0.0)) fail(ErrorCode::BadParams, "parameter '" + key + "' must be positive");
    }
    if (params.contains("t_min") && params.contains("t_max") && !(params.at("t_min") < params.at("t_max"))) {
        fail(ErrorCode::BadParams, "t_min must be below t_max");
    }
    if (!std::isfinite(ambient_curvature)) fail(ErrorCode::BadParams, "ambient curvature is not finite");
    if (kind != SurfaceKind::FieldFile && ambient_curvature != 0.0) {
        fail(ErrorCode::BadParams, "constructed surfaces live in flat space; ambient_curvature must be 0");
    }
}

bool is_umbilic(const SymMatrix& a, double umbilic_tol) {
    const double full = std::sqrt(a.frobenius_sq());
    const double traceless = std::sqrt(trace_free_project(a).frobenius_sq());
    return traceless <= umbilic_tol * std::max(1.0, full);
}

double minimality_residual(const ShapeField& field) {
    double worst = 0.0;
    for (const auto& s : field.samples) {
        const double r = std::abs(s.shape_operator.trace()) / (1.0 + std::sqrt(s.shape_operator.frobenius_sq()));
        worst = std::max(worst, r);
    }
    return worst;
}

void validate_field(const ShapeField& field, const Tolerances& tol) {
    if (field.samples.empty()) fail(ErrorCode::InvariantViolation, "field has no samples");
    const int n = field.spec.n;
    for (std::size_t i = 0; i < field.samples.size(); ++i) {
        const auto& s = field.samples[i];
        const std::string where = "sample " + std::to_string(i) + ": ";
        if (s.shape_operator.dim() != n) {
            fail(ErrorCode::InvariantViolation, where + "shape operator has dimension " +
                                                    std::to_string(s.shape_operator.dim()) + ", expected " +
                                                    std::to_string(n));
        }
        for (double v : s.shape_operator.data()) {
            if (!std::isfinite(v)) fail(ErrorCode::InvariantViolation, where + "shape operator has a non-finite entry");
        }
        if (!(s.area_weight > 0.0) || !std::isfinite(s.area_weight)) {
            fail(ErrorCode::InvariantViolation, where + "area weight must be positive and finite");
        }
        if (field.minimal_claimed) {
            const double tr = std::abs(s.shape_operator.trace());
            if (tr > tol.minimality * (1.0 + std::sqrt(s.shape_operator.frobenius_sq()))) {
                fail(ErrorCode::InvariantViolation, where + "field claims minimality but |tr A| = " + std::to_string(tr));
            }
        }
    }
}

double unit_sphere_volume(int m) {
    const double h = 0.5 * (m + 1);
    return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

namespace {

// Sample in the (t, θ) layout of a rotation hypersurface with profile data at t.
SamplePoint rotation_sample(int n, double t, double theta, double cell, double f, double df, double d2f,
                            const Tolerances& tol) {
    const double q = 1.0 + df * df;
    const double root = std::sqrt(q);
    std::vector<double> diag(n, 1.0 / (f * root));
    diag[0] = -d2f / (q * root);
    SymMatrix a = SymMatrix::diagonal(diag);
    const double weight = cell * std::pow(f, n - 1) * root * std::pow(std::sin(theta), n - 2) * unit_sphere_volume(n - 2);
    const bool umb = is_umbilic(a, tol.umbilic);
    return SamplePoint{{t, theta}, std::move(a), weight, umb};
}

double central_first(const std::function<double(double)>& f, double t) {
    const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(t));
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

double central_second(const std::function<double(double)>& f, double t) {
    const double h = std::pow(std::numeric_limits<double>::epsilon(), 0.25) * std::max(1.0, std::abs(t));
    return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

}  // namespace

ShapeField build_sphere(int n, double r, std::vector<int> grid, const Tolerances& tol) {
    ShapeField field;
    field.spec = SurfaceSpec{SurfaceKind::Sphere, n, {{"r", r}}, detail::expand_grid(grid, 2), 0.0};
    field.spec.validate();
    const auto& g = field.spec.grid;
    const double cell = (std::numbers::pi / g[0]) * (std::numbers::pi / g[1]);
    const SymMatrix a = SymMatrix::identity(n) * (1.0 / r);
    const double orbit = unit_sphere_volume(n - 2);
    field.samples.reserve(detail::grid_size(g));
    for (int i = 0; i < g[0]; ++i) {
        const double psi = detail::midpoint(0.0, std::numbers::pi, g[0], i);
        for (int j = 0; j < g[1]; ++j) {
            const double theta = detail::midpoint(0.0, std::numbers::pi, g[1], j);
            const double w = cell * std::pow(r, n) * std::pow(std::sin(psi), n - 1) *
                             std::pow(std::sin(theta), n - 2) * orbit;
            field.samples.push_back(SamplePoint{{psi, theta}, a, w, is_umbilic(a, tol.umbilic)});
        }
    }
    return field;
}

ShapeField build_cylinder(int n, double r, double height, std::vector<int> grid, const Tolerances& tol) {
    ShapeField field;
    field.spec = SurfaceSpec{SurfaceKind::Cylinder, n, {{"r", r}, {"height", height}}, detail::expand_grid(grid, 2), 0.0};
    field.spec.validate();
    const auto& g = field.spec.grid;
    const double cell = (height / g[0]) * (std::numbers::pi / g[1]);
    field.samples.reserve(detail::grid_size(g));
    for (int i = 0; i < g[0]; ++i) {
        const double t = detail::midpoint(-0.5 * height, 0.5 * height, g[0], i);
        for (int j = 0; j < g[1]; ++j) {
            const double theta = detail::midpoint(0.0, std::numbers::pi, g[1], j);
            field.samples.push_back(rotation_sample(n, t, theta, cell, r, 0.0, 0.0, tol));
        }
    }
    return field;
}

Profile polynomial_profile(std::vector<double> coeffs, double t_min, double t_max) {
    if (coeffs.empty()) fail(ErrorCode::BadProfile, "polynomial profile needs at least one coefficient");
    Profile p;
    p.t_min = t_min;
    p.t_max = t_max;
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.params["c" + std::to_string(k)] = coeffs[k];
    auto eval = [](std::vector<double> c) {
        return [c = std::move(c)](double t) {
            double acc = 0.0;
            for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
            return acc;
        };
    };
    auto derive = [](const std::vector<double>& c) {
        std::vector<double> d;
        for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
        if (d.empty()) d.push_back(0.0);
        return d;
    };
    const auto d1 = derive(coeffs);
    const auto d2 = derive(d1);
    p.f = eval(coeffs);
    p.df = eval(d1);
    p.d2f = eval(d2);
    return p;
}

ShapeField build_rotation_hypersurface(int n, const Profile& profile, std::vector<int> grid, const Tolerances& tol) {
    if (!profile.f) fail(ErrorCode::BadProfile, "profile has no function");
    ShapeField field;
    field.spec.kind = SurfaceKind::RotationHypersurface;
    field.spec.n = n;
    field.spec.params = profile.params;
    field.spec.params["t_min"] = profile.t_min;
    field.spec.params["t_max"] = profile.t_max;
    field.spec.grid = detail::expand_grid(grid, 2);
    field.spec.validate();
    const auto& g = field.spec.grid;
    const double cell = ((profile.t_max - profile.t_min) / g[0]) * (std::numbers::pi / g[1]);
    field.samples.reserve(detail::grid_size(g));
    for (int i = 0; i < g[0]; ++i) {
        const double t = detail::midpoint(profile.t_min, profile.t_max, g[0], i);
        const double f = profile.f(t);
        if (!(f > 0.0) || !std::isfinite(f)) {
            fail(ErrorCode::BadProfile, "profile value " + std::to_string(f) + " at t=" + std::to_string(t) + " is not positive");
        }
        const double df = profile.df ? profile.df(t) : central_first(profile.f, t);
        const double d2f = profile.d2f ? profile.d2f(t) : central_second(profile.f, t);
        for (int j = 0; j < g[1]; ++j) {
            const double theta = detail::midpoint(0.0, std::numbers::pi, g[1], j);
            field.samples.push_back(rotation_sample(n, t, theta, cell, f, df, d2f, tol));
        }
    }
    return field;
}

namespace detail {

SamplePoint make_rotation_sample(int n, double t, double theta, double cell, double f, double df, double d2f,
                                 const Tolerances& tol) {
    return rotation_sample(n, t, theta, cell, f, df, d2f, tol);
}

}  // namespace detail

}  // namespace rigidity
