#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/sym_matrix.hpp"
#include "rigidity/tolerances.hpp"

namespace rigidity {

enum class SurfaceKind { Sphere, Cylinder, RotationHypersurface, Catenoid, Chart, FieldFile };

std::string_view to_string(SurfaceKind kind);
SurfaceKind surface_kind_from_string(std::string_view name);

struct SurfaceSpec {
    SurfaceKind kind = SurfaceKind::FieldFile;
    int n = 4;
    std::map<std::string, double> params;
    std::vector<int> grid;
    double ambient_curvature = 0.0;

    /// Throws BadParams: n >= 4, grid counts >= 2, finite params, positive
    /// radii/heights/semi-axes, ordered t bounds, flat ambient for constructed kinds.
    void validate() const;

    bool operator==(const SurfaceSpec&) const = default;
};

struct SamplePoint {
    std::vector<double> coords;
    SymMatrix shape_operator;  // orthonormal tangent frame
    double area_weight = 0.0;
    bool umbilic_flag = false;

    bool operator==(const SamplePoint&) const = default;
};

struct ShapeField {
    SurfaceSpec spec;
    std::vector<SamplePoint> samples;
    bool minimal_claimed = false;

    int dim() const { return spec.n; }
    bool operator==(const ShapeField&) const = default;
};

/// Enforces the ShapeField invariants; violations are InvariantViolation
/// errors naming the offending sample index.
void validate_field(const ShapeField& field, const Tolerances& tol = {});

/// |Å| <= umbilic_tol · max(1, |A|).
bool is_umbilic(const SymMatrix& a, double umbilic_tol);

/// |tr A| / (1 + |A|), maximised over samples.
double minimality_residual(const ShapeField& field);

/// Volume of the unit m-sphere S^m ⊂ R^{m+1}.
double unit_sphere_volume(int m);

/// Rotation-type fields (sphere, cylinder, rotation hypersurfaces, catenoid)
/// are sampled on (axial parameter, polar angle on the orbit sphere); the
/// remaining S^{n−2} of each orbit is integrated exactly into the weight.
/// Shape operators use the frame (profile direction, orbit directions...).
ShapeField build_sphere(int n, double r, std::vector<int> grid, const Tolerances& tol = {});
ShapeField build_cylinder(int n, double r, double height, std::vector<int> grid, const Tolerances& tol = {});

/// Generating profile r = f(t) of a rotation hypersurface about the t-axis.
/// Missing derivatives are taken by central differences.
struct Profile {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
    double t_min = -1.0;
    double t_max = 1.0;
    std::map<std::string, double> params;  // recorded into the field spec
};

/// f(t) = Σ coeffs[k] tᵏ with exact derivatives.
Profile polynomial_profile(std::vector<double> coeffs, double t_min, double t_max);

ShapeField build_rotation_hypersurface(int n, const Profile& profile, std::vector<int> grid,
                                       const Tolerances& tol = {});

struct CatenoidOptions {
    double profile_tol = 1e-8;
    /// Sampled patch is |t| <= extent_fraction · (half-height of the full catenoid).
    double extent_fraction = 0.75;
    int initial_substeps = 1;
    int max_substeps = 4096;
};

/// Half-height of the complete n-catenoid with waist radius 1:
/// B(½ − 1/(2(n−1)), ½) / (2(n−1)).
double catenoid_half_height(int n);

/// Minimal rotation hypersurface from f f'' = (n−1)(1 + f'²), f(0) = 1,
/// f'(0) = 0, integrated with classical RK4. The ODE step is halved until the
/// minimality residual is below profile_tol (ODEStepFailure otherwise).
ShapeField build_catenoid(int n, std::vector<int> grid, const CatenoidOptions& options = {},
                          const Tolerances& tol = {});

/// One fixed-step catenoid build: step = (axial cell) / (2 · substeps).
/// f'' at each sample is a fourth-order difference of the integrated f', so
/// the minimality residual measures the integration error.
ShapeField build_catenoid_fixed_step(int n, std::vector<int> grid, int substeps, double extent_fraction,
                                     const Tolerances& tol = {});

/// The same catenoid profile as a Profile (cubic Hermite between RK4 nodes,
/// f'' from the ODE right-hand side), for cross-construction checks.
Profile catenoid_profile(int n, double extent_fraction, double step);

// Charts of hypersurfaces in flat R^{n+1}.

using ChartMap = std::function<std::vector<double>(std::span<const double>)>;

struct Chart {
    int n = 4;
    ChartMap map;
    std::vector<double> lower;
    std::vector<double> upper;
    std::map<std::string, double> params;
};

enum class NormalOrientation { TowardOrigin, AsComputed };

struct ChartOptions {
    /// Finite-difference step relative to each direction's extent; <= 0 picks
    /// the default eps^{1/4}.
    double fd_step = 0.0;
    /// Compare against the half step; StepTooLarge if the shape operators
    /// differ by more than step_check_tol · max(1, |A|).
    bool self_check = true;
    double step_check_tol = 1e-3;
    NormalOrientation orientation = NormalOrientation::TowardOrigin;
    int threads = 1;
};

double default_fd_step();

/// Shape operator by central differences: g = JᵀJ, unit normal from the
/// generalized cross product of the columns of J, II_ij = ⟨X_ij, N⟩, and
/// A = R⁻ᵀ II R⁻¹ for the Cholesky factor g = RᵀR. Weight √det g × cell.
ShapeField chart_shape_operator(const Chart& chart, std::vector<int> grid, const ChartOptions& options = {},
                                const Tolerances& tol = {});

/// Ellipsoid Σ x_i²/a_i² = 1 in R^{n+1} over hyperspherical angles
/// (θ_1..θ_{n−1} ∈ (0,π), φ ∈ (0,2π)); n = semi_axes.size() − 1.
Chart ellipsoid_chart(const std::vector<double>& semi_axes);
Chart sphere_chart(int n, double r);
/// S^{n−1}(r) × [−height/2, height/2], coordinates (t, θ_1..θ_{n−2}, φ).
Chart cylinder_chart(int n, double r, double height);
/// x ↦ Q·x applied to the chart's image.
Chart rotated_chart(const Chart& chart, const DenseMatrix& q);

}  // namespace rigidity
