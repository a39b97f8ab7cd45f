// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "rigidity/catalog.hpp"
#include "rigidity/cli/commands.hpp"
#include "rigidity/curvature.hpp"
#include "rigidity/energy.hpp"
#include "rigidity/inequalities.hpp"
#include "rigidity/random.hpp"
#include "rigidity/spectral.hpp"

using namespace rigidity;

namespace {

constexpr std::uint64_t kSeed = 20240917;
constexpr std::size_t kFuzzCount = 100000;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The shared fuzz corpus: matrix i has n = 4 + i mod 9 and its own stream.
SymMatrix fuzz_matrix(std::size_t i, Rng& rng) { return random_trace_free(4 + static_cast<int>(i % 9), rng); }

void ac1(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    long violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kFuzzCount; ++i) {
        Rng rng(derive_seed(kSeed, i));
        const auto r = main_inequality(fuzz_matrix(i, rng));
        worst = std::min(worst, r.verdict.relative_defect);
        if (r.verdict.relative_defect < -1e-12) ++violations;
    }
    const double elapsed = seconds_since(t0);
    o.detail << kFuzzCount << " trace-free matrices, n=4..12, violations=" << violations
             << ", worst relative defect=" << worst << ", " << elapsed << " s single-threaded";
    o.require(violations == 0, "violations");
    o.require(elapsed < 60.0, "runtime >= 60 s");
}

void ac2(Outcome& o) {
    int flagged = 0, multiplicity = 0, members = 0;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int n = 4 + i % 5;
        Rng rng(derive_seed(kSeed + 2, static_cast<std::uint64_t>(i)));
        const double mu = rng.uniform(0.05, 3.0) * (i % 2 == 0 ? 1.0 : -1.0);
        const auto r = main_inequality(equality_family_member(n, mu, rng));
        ++members;
        worst = std::max(worst, std::abs(r.verdict.relative_defect));
        if (r.verdict.equality && std::abs(r.verdict.relative_defect) <= 1e-10) ++flagged;
        const auto& m = r.equality_case.multiplicities;
        if (r.equality_case.kind == EqualityKind::EigenspaceDimExactlyNMinus1 &&
            std::find(m.begin(), m.end(), n - 1) != m.end())
            ++multiplicity;
    }
    o.require(flagged == members, "equality flag");
    o.require(multiplicity == members, "multiplicity n-1");

    const double d[] = {1, 1, 1, -3};
    const SymMatrix a = SymMatrix::diagonal(d);
    const auto prof = symfun_from_spectrum(eigen_spectrum(a));
    double p_err = 0.0;
    for (int k = 0; k <= 4; ++k) p_err = std::max(p_err, std::abs(prof.p[k] - (1.0 - k)));
    const MatrixNorms nm = norms(a);
    const double rhs = main_constant(4) * nm.norm_sq * nm.norm_sq;
    o.require(p_err <= 1e-12, "p_k = 1 - k");
    o.require(std::abs(nm.square_norm_sq - 84.0) <= 1e-12 * 84.0, "|A^2|^2 = 84");
    o.require(std::abs(rhs - 84.0) <= 1e-12 * 84.0 && nm.norm_sq * nm.norm_sq == 144.0, "(7/12)*144 = 84");
    o.detail << members << " family members n=4..8: flagged " << flagged << ", multiplicity recovered " << multiplicity
             << ", worst |relative defect|=" << worst << "; diag(1,1,1,-3): max|p_k-(1-k)|=" << p_err
             << ", |A^2|^2=" << nm.square_norm_sq << ", (7/12)|A|^4=" << rhs;
}

void ac3(Outcome& o) {
    const Tolerances tol;
    double worst_newton = std::numeric_limits<double>::infinity();
    double worst_step1 = std::numeric_limits<double>::infinity();
    double worst_step2 = -std::numeric_limits<double>::infinity();
    long bad = 0, spurious_equality = 0;
    std::vector<double> grid(100);
    for (std::size_t i = 0; i < kFuzzCount; ++i) {
        Rng rng(derive_seed(kSeed, i));
        const SymMatrix a = fuzz_matrix(i, rng);
        const int n = a.dim();
        const Spectrum spec = eigen_spectrum(a);
        const SymFunProfile prof = symfun_from_spectrum(spec);
        for (int k = 1; k < n; ++k) {
            const double rel = newton_gap(prof, spec, k, tol).verdict.relative_defect;
            worst_newton = std::min(worst_newton, rel);
            if (rel < -1e-12) ++bad;
        }
        Rng lam(derive_seed(kSeed + 3, i));
        const double spread = 3.0 * std::sqrt(prof.s(2) / n);
        for (double& l : grid) l = lam.uniform(-spread, spread);
        const LambdaScan scan = lambda_scan(prof, grid, tol);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double rel = scan.q[j] / scan.q_scale[j];
            worst_step1 = std::min(worst_step1, rel);
            if (rel < -1e-12) ++bad;
        }
        worst_step2 = std::max(worst_step2, scan.step2_product / scan.step2_scale);
        if (scan.step2_product > 1e-12 * scan.step2_scale) ++bad;
        const bool mult = spec.max_multiplicity() >= n - 1;
        const auto p3 = prop_p3(prof, spec, tol);
        const auto p4 = prop_p4(prof, spec, tol);
        if (!p3.verdict.holds || !p4.verdict.holds) ++bad;
        if ((p3.verdict.equality || p4.verdict.equality) && !mult) ++spurious_equality;
    }
    int family_equal = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 4 + i % 5;
        Rng rng(derive_seed(kSeed + 4, static_cast<std::uint64_t>(i)));
        const SymMatrix e = equality_family_member(n, rng.uniform(0.1, 2.0), rng);
        const Spectrum spec = eigen_spectrum(e);
        const SymFunProfile prof = symfun_from_spectrum(spec);
        if (prop_p3(prof, spec, tol).verdict.equality && prop_p4(prof, spec, tol).verdict.equality) ++family_equal;
    }
    o.detail << "worst newton gap=" << worst_newton << ", worst lambda step-1=" << worst_step1
             << ", worst step-2 product=" << worst_step2 << " (relative); p3/p4 equality on family " << family_equal
             << "/100, spurious equality off family " << spurious_equality;
    o.require(bad == 0, "sign violations");
    o.require(spurious_equality == 0, "equality off the family");
    o.require(family_equal == 100, "equality on the family");
}

void ac4(Outcome& o) {
    double worst_bridge = 0.0, worst_sigma = 0.0;
    for (std::size_t i = 0; i < kFuzzCount; ++i) {
        Rng rng(derive_seed(kSeed, i));
        const SymMatrix a = fuzz_matrix(i, rng);
        const auto r = main_inequality(a);
        worst_bridge = std::max(worst_bridge, std::abs(r.bridge_residual) / r.bridge_scale);
        const auto s = sigma_norm_identities(a);
        worst_sigma = std::max({worst_sigma, std::abs(s.r2) / s.scale, std::abs(s.r4) / s.scale});
    }
    o.detail << "max bridge residual/max(1,|A|^4)=" << worst_bridge << ", max sigma_2/sigma_4 residual=" << worst_sigma;
    o.require(worst_bridge <= 1e-10, "bridge");
    o.require(worst_sigma <= 1e-10, "sigma identities");
}

void ac5(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_weyl = 0.0, worst_kn = 0.0, worst_family = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 4 + i % 5;
        Rng rng(derive_seed(kSeed + 5, static_cast<std::uint64_t>(i)));
        const SymMatrix a = random_trace_free(n, rng);
        const MatrixNorms nm = norms(a);
        const double scale = std::max(1.0, nm.norm_sq * nm.norm_sq);
        const double direct = weyl_from_gauss_codazzi(a).norm_sq();
        worst_weyl = std::max(worst_weyl, std::abs(direct - weyl_norm_closed_form(nm.norm_sq, nm.square_norm_sq, n)) / scale);
        const auto kn = kn_identity_suite(a);
        for (double v : kn.residuals) worst_kn = std::max(worst_kn, std::abs(v) / kn.scale);
    }
    for (int i = 0; i < 100; ++i) {
        const int n = 4 + i % 5;
        Rng rng(derive_seed(kSeed + 6, static_cast<std::uint64_t>(i)));
        const SymMatrix e = equality_family_member(n, rng.uniform(0.1, 2.0), rng);
        const double norm4 = e.frobenius_sq() * e.frobenius_sq();
        worst_family = std::max(worst_family, weyl_from_gauss_codazzi(e).norm_sq() / norm4);
    }
    const double elapsed = seconds_since(t0);
    o.detail << "1000 matrices n=4..8: max |direct-closed|/max(1,|A|^4)=" << worst_weyl
             << ", max KN residual=" << worst_kn << ", max |W|^2/|A|^4 on family=" << worst_family << ", "
             << elapsed << " s";
    o.require(worst_weyl <= 1e-9, "closed form");
    o.require(worst_kn < 1e-9, "KN identities");
    o.require(worst_family <= 1e-9, "Weyl zero on family");
    o.require(elapsed < 120.0, "runtime >= 120 s");
}

void ac6(Outcome& o) {
    const ShapeField f = build_catenoid(4, {64, 32});
    const double residual = minimality_residual(f);
    const EnergyReport r = rotational_energy(f);
    double worst_pointwise = 0.0;
    for (const auto& p : r.pointwise) worst_pointwise = std::max(worst_pointwise, std::abs(p.relative_defect));
    std::vector<double> fixed;
    for (int m : {1, 2, 4}) fixed.push_back(minimality_residual(build_catenoid_fixed_step(4, {64, 32}, m, 0.75)));
    const double ratio1 = fixed[0] / fixed[1], ratio2 = fixed[1] / fixed[2];
    o.detail << "minimality residual=" << residual << ", max pointwise relative defect=" << worst_pointwise
             << ", E_rot/scale=" << r.e_rot / r.quadrature_scale << ", classification=" << to_string(r.classification)
             << ", step-halving ratios=" << ratio1 << ", " << ratio2;
    o.require(residual <= 1e-8, "minimality");
    o.require(worst_pointwise <= 1e-8, "pointwise defect");
    o.require(r.e_rot <= 1e-7 * r.quadrature_scale, "E_rot");
    o.require(r.classification == Classification::CatenoidCandidate, "classification");
    o.require(ratio1 >= 8.0 && ratio2 >= 8.0, "convergence order");
}

void ac7(Outcome& o) {
    const EnergyReport cyl = rotational_energy(build_cylinder(4, 2.0, 2.0, {64, 32}));
    const EnergyReport rot =
        rotational_energy(build_rotation_hypersurface(4, polynomial_profile({1.0, 0.2, 0.5, -0.1}, -1.0, 1.0), {64, 32}));
    const EnergyReport sph = rotational_energy(build_sphere(4, 1.5, {64, 32}));

    const std::vector<double> axes{1.0, 1.25, 1.5, 1.75, 2.0};
    ChartOptions coarse, fine;
    fine.fd_step = 0.5 * default_fd_step();
    const ShapeField ell_field = chart_shape_operator(ellipsoid_chart(axes), {8}, coarse);
    const EnergyReport ell = rotational_energy(ell_field);
    const EnergyReport ell_fine = rotational_energy(chart_shape_operator(ellipsoid_chart(axes), {8}, fine));
    const double eps = std::numeric_limits<double>::epsilon();
    const double noise = std::max(std::abs(ell.e_rot - ell_fine.e_rot),
                                  static_cast<double>(ell_field.samples.size()) * eps * ell.quadrature_scale);

    o.detail << "cylinder |E_rot|/scale=" << std::abs(cyl.e_rot) / cyl.quadrature_scale << " ("
             << to_string(cyl.classification) << "), polynomial profile |E_rot|/scale="
             << std::abs(rot.e_rot) / rot.quadrature_scale << " (" << to_string(rot.classification)
             << "), ellipsoid E_rot=" << ell.e_rot << " vs noise floor " << noise << " (" << to_string(ell.classification)
             << "), sphere E_rot=" << sph.e_rot << ", E_rot_conf=" << sph.e_rot_conf << " ("
             << to_string(sph.classification) << ")";
    o.require(std::abs(cyl.e_rot) <= 1e-10 * cyl.quadrature_scale, "cylinder energy");
    o.require(cyl.classification == Classification::RotationCandidate, "cylinder classification");
    o.require(std::abs(rot.e_rot) <= 1e-10 * rot.quadrature_scale, "rotation energy");
    o.require(rot.classification == Classification::RotationCandidate, "rotation classification");
    o.require(ell.e_rot > 1e3 * noise, "ellipsoid above noise");
    o.require(ell.classification == Classification::Generic, "ellipsoid classification");
    o.require(sph.e_rot == 0.0 && sph.e_rot_conf == 0.0, "sphere energies");
    o.require(sph.classification == Classification::AllUmbilic, "sphere classification");
}

void ac8(Outcome& o) {
    double worst_conf = 0.0, worst_homog = 0.0;
    bool n4_identical = true;
    int fields = 0;
    for (int n : {4, 5, 6}) {
        std::vector<double> axes;
        for (int i = 0; i <= n; ++i) axes.push_back(1.0 + 0.3 * i);
        const std::vector<ShapeField> catalog = {
            chart_shape_operator(ellipsoid_chart(axes), {n == 6 ? 4 : 6}),
            build_catenoid(n, {32, 16}),
            build_rotation_hypersurface(n, polynomial_profile({1.0, 0.0, 0.4}, -1.0, 1.0), {32, 16}),
        };
        for (const ShapeField& f : catalog) {
            ++fields;
            const EnergyReport base = rotational_energy(f);
            if (n == 4 && std::memcmp(&base.e_rot, &base.e_rot_conf, sizeof(double)) != 0) n4_identical = false;
            for (double t : {0.5, 2.0}) {
                const EnergyReport r = rotational_energy(conformal_rescale(f, t));
                const double conf_scale = std::max(std::abs(base.e_rot_conf), std::numeric_limits<double>::min());
                worst_conf = std::max(worst_conf, std::abs(r.e_rot_conf - base.e_rot_conf) / conf_scale);
                if (n == 4 && std::memcmp(&r.e_rot, &r.e_rot_conf, sizeof(double)) != 0) n4_identical = false;
                if (n == 5) {
                    const double expect = t * base.e_rot;
                    const double scale = std::max(std::abs(expect), std::numeric_limits<double>::min());
                    worst_homog = std::max(worst_homog, std::abs(r.e_rot - expect) / scale);
                }
            }
        }
    }
    o.detail << fields << " fields x t in {0.5, 2}: max relative change of E_rot_conf=" << worst_conf
             << ", n=5 max |E_rot(t) - t E_rot|/|t E_rot|=" << worst_homog << ", n=4 E_rot_conf == E_rot bitwise: "
             << (n4_identical ? "yes" : "no");
    o.require(worst_conf < 1e-12, "conformal invariance");
    o.require(worst_homog <= 1e-12, "homogeneity");
    o.require(n4_identical, "n=4 identity");
}

double chart_error(const ShapeField& field, std::vector<double> expected) {
    std::sort(expected.begin(), expected.end());
    double worst = 0.0;
    for (const auto& s : field.samples) {
        const auto ev = jacobi_eigen(s.shape_operator).values;
        for (std::size_t i = 0; i < ev.size(); ++i) worst = std::max(worst, std::abs(ev[i] - expected[i]));
    }
    return worst;
}

void ac9(Outcome& o) {
    double worst = 0.0;
    for (std::size_t i = 0; i < kFuzzCount; ++i) {
        Rng rng(derive_seed(kSeed, i));
        const SymMatrix a = fuzz_matrix(i, rng);
        const auto spectral = symfun_from_spectrum(eigen_spectrum(a));
        const auto newton = symfun_from_power_sums(a);
        for (int k = 0; k <= a.dim(); ++k) {
            const double scale = std::max(1.0, std::abs(spectral.sigma[k]));
            worst = std::max(worst, std::abs(spectral.sigma[k] - newton.sigma[k]) / scale);
        }
    }
    ChartOptions opts;
    opts.self_check = false;
    std::vector<double> sphere_err, cyl_err;
    for (double h : {4e-2, 2e-2, 1e-2}) {
        opts.fd_step = h;
        sphere_err.push_back(chart_error(chart_shape_operator(sphere_chart(4, 2.0), {5}, opts), {0.5, 0.5, 0.5, 0.5}));
        cyl_err.push_back(chart_error(chart_shape_operator(cylinder_chart(4, 2.0, 3.0), {5}, opts), {0.0, 0.5, 0.5, 0.5}));
    }
    auto order = [](const std::vector<double>& e, int i) { return std::log2(e[i] / e[i + 1]); };
    const double so1 = order(sphere_err, 0), so2 = order(sphere_err, 1);
    const double co1 = order(cyl_err, 0), co2 = order(cyl_err, 1);
    o.detail << "max sigma disagreement (relative)=" << worst << "; chart errors at fd_step 4e-2/2e-2/1e-2: sphere "
             << sphere_err[0] << "/" << sphere_err[1] << "/" << sphere_err[2] << " (orders " << so1 << ", " << so2
             << "), cylinder " << cyl_err[0] << "/" << cyl_err[1] << "/" << cyl_err[2] << " (orders " << co1 << ", "
             << co2 << ")";
    o.require(worst <= 1e-9, "sigma paths");
    for (double q : {so1, so2, co1, co2}) o.require(std::abs(q - 2.0) <= 0.2, "second-order convergence");
}

void ac10(Outcome& o) {
    cli::VerifyConfig cfg;
    cfg.dims = {4, 5, 6};
    cfg.samples = 2000;
    cfg.seed = 42;
    std::vector<std::string> dumps;
    for (int threads : {1, 4, 8}) {
        cfg.threads = threads;
        dumps.push_back(cli::dump_report(cli::run_verify(cfg).report));
    }
    const bool same = dumps[0] == dumps[1] && dumps[0] == dumps[2];
    o.detail << "verify --n 4,5,6 --samples 2000 --seed 42 at 1/4/8 threads: " << dumps[0].size()
             << "-byte reports " << (same ? "identical" : "differ");
    o.require(same, "byte identity");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"AC1 main inequality fuzz", ac1},   {"AC2 equality family", ac2},
        {"AC3 Newton/lambda chain", ac3},    {"AC4 bridge identity", ac4},
        {"AC5 Weyl identity", ac5},          {"AC6 catenoid", ac6},
        {"AC7 rotation vs generic", ac7},    {"AC8 conformal invariance", ac8},
        {"AC9 oracle agreement", ac9},       {"AC10 determinism", ac10},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
