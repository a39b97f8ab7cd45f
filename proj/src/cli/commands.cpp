#include "rigidity/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "rigidity/catalog.hpp"
#include "rigidity/curvature.hpp"
#include "rigidity/energy.hpp"
#include "rigidity/error.hpp"
#include "rigidity/field_io.hpp"
#include "rigidity/inequalities.hpp"
#include "rigidity/parallel.hpp"
#include "rigidity/random.hpp"
#include "rigidity/spectral.hpp"

namespace rigidity::cli {

using nlohmann::json;

namespace {

enum Family { Newton, PropP3, PropP4, Cubic, Main, SigmaNorm, Lambda, KnIdentity, kFamilyCount };

constexpr const char* kFamilyNames[kFamilyCount] = {"newton_gap",   "prop_p3",
                                                    "prop_p4",      "cubic_bound",
                                                    "main_inequality", "sigma_norm_identities",
                                                    "lambda_scan",  "kn_identity_suite"};

// Inequality families report the smallest relative defect; identity
// families the largest relative residual.
constexpr bool kLowerIsWorse[kFamilyCount] = {true, true, true, true, true, false, true, false};

struct Tally {
    long evaluations = 0;
    long failures = 0;
    double worst = std::numeric_limits<double>::quiet_NaN();

    void observe(double value, bool ok, bool lower_is_worse) {
        ++evaluations;
        if (!ok) ++failures;
        if (std::isnan(worst) || (lower_is_worse ? value < worst : value > worst)) worst = value;
    }
};

struct SampleTallies {
    Tally family[kFamilyCount];
};

struct FamilySummary {
    Tally tally;
    std::optional<std::size_t> first_failure;
    int first_failure_dim = 0;
};

SampleTallies check_one(int n, bool equality_member, Rng& rng, const VerifyConfig& cfg) {
    const Tolerances& tol = cfg.tol;
    SampleTallies out;
    auto observe = [&](Family f, double value, bool ok) { out.family[f].observe(value, ok, kLowerIsWorse[f]); };

    SymMatrix general(n);
    SymMatrix traceless(n);
    if (equality_member) {
        const double mu = rng.uniform(0.1, 2.0) * (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
        traceless = equality_family_member(n, mu, rng);
        general = traceless + SymMatrix::identity(n) * rng.uniform(-1.0, 1.0);
    } else {
        general = random_symmetric(n, rng);
        traceless = trace_free_project(general);
    }

    const Spectrum gspec = eigen_spectrum(general, tol.cluster);
    const SymFunProfile gprof = symfun_from_spectrum(gspec);
    for (int k = 1; k <= n - 1; ++k) {
        const CheckResult r = newton_gap(gprof, gspec, k, tol);
        observe(Newton, r.verdict.relative_defect, r.verdict.relative_defect >= -tol.holds);
    }

    const Spectrum spec = eigen_spectrum(traceless, tol.cluster);
    const SymFunProfile prof = symfun_from_spectrum(spec);
    const bool multiplicity = spec.max_multiplicity() >= n - 1;
    auto equality_consistent = [&](bool equality) { return equality_member ? equality : (!equality || multiplicity); };

    {
        const CheckResult r = prop_p3(prof, spec, tol);
        observe(PropP3, r.verdict.relative_defect,
                r.verdict.relative_defect >= -tol.holds && equality_consistent(r.verdict.equality));
    }
    {
        const InequalityVerdict v = cubic_bound(norms(traceless), n, tol);
        observe(Cubic, v.relative_defect, v.relative_defect >= -tol.holds && equality_consistent(v.equality));
    }
    {
        std::vector<double> grid(static_cast<std::size_t>(cfg.lambdas_per_matrix));
        const double spread = 3.0 * std::sqrt(std::max(prof.s(2), 0.0) / n);
        for (double& l : grid) l = rng.uniform(-spread, spread);
        const LambdaScan scan = lambda_scan(prof, grid, tol);
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < scan.q.size(); ++i) worst = std::min(worst, scan.q[i] / scan.q_scale[i]);
        // The step-2 product is nonpositive; report it with the sign flipped
        // so both quantities read as "defect >= 0".
        worst = std::min(worst, -scan.step2_product / scan.step2_scale);
        observe(Lambda, worst, worst >= -tol.holds);
    }

    if (n >= 4) {
        {
            const CheckResult r = prop_p4(prof, spec, tol);
            observe(PropP4, r.verdict.relative_defect,
                    r.verdict.relative_defect >= -tol.holds && equality_consistent(r.verdict.equality));
        }
        {
            const MainInequalityResult r = main_inequality(traceless, tol);
            bool ok = r.verdict.relative_defect >= -tol.holds && r.bridge_ok;
            if (equality_member) {
                ok = ok && r.verdict.equality && r.verdict.relative_defect <= tol.equality &&
                     r.equality_case.kind == EqualityKind::EigenspaceDimExactlyNMinus1;
            } else if (r.verdict.equality) {
                ok = ok && r.equality_case.kind != EqualityKind::None;
            }
            observe(Main, r.verdict.relative_defect, ok);
        }
        {
            const SigmaNormResiduals r = sigma_norm_identities(traceless, tol);
            const double rel = std::max(std::abs(r.r2), std::abs(r.r4)) / r.scale;
            observe(SigmaNorm, rel, rel <= tol.identity);
        }
        {
            const KnIdentityResiduals r = kn_identity_suite(traceless, tol);
            double rel = 0.0;
            for (double v : r.residuals) rel = std::max(rel, std::abs(v) / r.scale);
            const MatrixNorms nm = norms(traceless);
            const double closed = weyl_norm_closed_form(nm.norm_sq, nm.square_norm_sq, n);
            const double direct = weyl_from_gauss_codazzi(traceless, tol).norm_sq();
            rel = std::max(rel, std::abs(direct - closed) / r.scale);
            if (equality_member) rel = std::max(rel, std::abs(closed) / r.scale);
            observe(KnIdentity, rel, rel <= tol.tensor_identity);
        }
    }
    return out;
}

json tally_json(Family f, const FamilySummary& s) {
    json j = {{"family", kFamilyNames[f]},
              {"evaluations", s.tally.evaluations},
              {"failures", s.tally.failures},
              {"worst_metric", kLowerIsWorse[f] ? "min_relative_defect" : "max_relative_residual"},
              {"passed", s.tally.failures == 0}};
    j["worst"] = std::isnan(s.tally.worst) ? json(nullptr) : json(s.tally.worst);
    j["first_failure"] = s.first_failure ? json({{"sample", *s.first_failure}, {"n", s.first_failure_dim}}) : json(nullptr);
    return j;
}

json report_header(const std::string& command) {
    return {{"tool", "rigidity"}, {"version", RIGIDITY_VERSION}, {"command", command}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::BadParams, "cannot open '" + path + "' for writing");
    out << text;
    if (!out) fail(ErrorCode::BadParams, "failed writing '" + path + "'");
}

std::vector<int> parse_grid(const std::string& text) {
    std::vector<int> grid;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            grid.push_back(v);
        } catch (const std::exception&) {
            fail(ErrorCode::BadParams, "grid '" + text + "' must look like 64x32");
        }
    }
    if (grid.empty()) fail(ErrorCode::BadParams, "grid '" + text + "' is empty");
    return grid;
}

}  // namespace

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

VerifyOutcome run_verify(const VerifyConfig& cfg) {
    if (cfg.samples < 1) fail(ErrorCode::BadParams, "samples must be ≥ 1");
    if (cfg.dims.empty()) fail(ErrorCode::BadParams, "at least one dimension is required");
    for (int n : cfg.dims) {
        if (n < kMinDim || n > kMaxDim) fail(ErrorCode::BadParams, "dimensions must lie in [3, 64]");
    }
    if (cfg.family_stride < 1) fail(ErrorCode::BadParams, "family stride must be ≥ 1");
    if (cfg.lambdas_per_matrix < 1) fail(ErrorCode::BadParams, "lambda count must be ≥ 1");

    const std::size_t total = cfg.dims.size() * static_cast<std::size_t>(cfg.samples);
    std::vector<SampleTallies> results(total);
    parallel_for(total, cfg.threads, [&](std::size_t i) {
        const int n = cfg.dims[i / static_cast<std::size_t>(cfg.samples)];
        const bool member = (i % static_cast<std::size_t>(cfg.family_stride)) == 0;
        Rng rng(derive_seed(cfg.seed, i));
        results[i] = check_one(n, member, rng, cfg);
    });

    FamilySummary summary[kFamilyCount];
    for (std::size_t i = 0; i < total; ++i) {
        for (int f = 0; f < kFamilyCount; ++f) {
            const Tally& t = results[i].family[f];
            FamilySummary& s = summary[f];
            if (t.evaluations == 0) continue;
            if (t.failures > 0 && !s.first_failure) {
                s.first_failure = i;
                s.first_failure_dim = cfg.dims[i / static_cast<std::size_t>(cfg.samples)];
            }
            s.tally.evaluations += t.evaluations;
            s.tally.failures += t.failures;
            if (std::isnan(s.tally.worst) || (kLowerIsWorse[f] ? t.worst < s.tally.worst : t.worst > s.tally.worst)) {
                s.tally.worst = t.worst;
            }
        }
    }

    VerifyOutcome outcome;
    outcome.passed = true;
    json checks = json::array();
    for (int f = 0; f < kFamilyCount; ++f) {
        checks.push_back(tally_json(static_cast<Family>(f), summary[f]));
        outcome.passed = outcome.passed && summary[f].tally.failures == 0;
    }
    outcome.report = report_header("verify");
    outcome.report["config"] = {{"dims", cfg.dims},
                                {"samples_per_dimension", cfg.samples},
                                {"seed", cfg.seed},
                                {"equality_family_stride", cfg.family_stride},
                                {"lambdas_per_matrix", cfg.lambdas_per_matrix}};
    outcome.report["tolerances"] = to_json(cfg.tol);
    outcome.report["checks"] = std::move(checks);
    outcome.report["passed"] = outcome.passed;
    return outcome;
}

namespace {

struct CatalogArgs {
    std::string surface;
    int n = 4;
    std::string grid;
    std::string out;
    double r = 1.0;
    double height = 2.0;
    std::vector<double> coeffs{1.0, 0.0, 1.0};
    double t_min = -1.0;
    double t_max = 1.0;
    std::vector<double> axes;
    double profile_tol = 1e-8;
    double extent = 0.75;
    double fd_step = 0.0;
};

const std::vector<std::string> kSurfaces = {"sphere", "cylinder", "catenoid", "rotation",
                                            "ellipsoid", "sphere-chart", "cylinder-chart"};

ShapeField build_catalog(const CatalogArgs& a, int threads) {
    auto grid_or = [&](const char* fallback) { return parse_grid(a.grid.empty() ? fallback : a.grid); };
    ChartOptions chart_opts;
    chart_opts.fd_step = a.fd_step;
    chart_opts.threads = threads;
    if (a.surface == "sphere") return build_sphere(a.n, a.r, grid_or("32x16"));
    if (a.surface == "cylinder") return build_cylinder(a.n, a.r, a.height, grid_or("32x16"));
    if (a.surface == "catenoid") {
        CatenoidOptions opts;
        opts.profile_tol = a.profile_tol;
        opts.extent_fraction = a.extent;
        return build_catenoid(a.n, grid_or("64x32"), opts);
    }
    if (a.surface == "rotation") {
        return build_rotation_hypersurface(a.n, polynomial_profile(a.coeffs, a.t_min, a.t_max), grid_or("64x32"));
    }
    if (a.surface == "ellipsoid") {
        std::vector<double> axes = a.axes;
        if (axes.empty()) {
            for (int i = 0; i <= a.n; ++i) axes.push_back(1.0 + 0.2 * i);
        }
        if (static_cast<int>(axes.size()) != a.n + 1) fail(ErrorCode::BadParams, "ellipsoid needs n + 1 semi-axes");
        for (double ax : axes) {
            if (!(ax > 0.0)) fail(ErrorCode::BadParams, "semi-axes must be positive");
        }
        return chart_shape_operator(ellipsoid_chart(axes), grid_or("8"), chart_opts);
    }
    if (a.surface == "sphere-chart") return chart_shape_operator(sphere_chart(a.n, a.r), grid_or("8"), chart_opts);
    if (a.surface == "cylinder-chart") {
        return chart_shape_operator(cylinder_chart(a.n, a.r, a.height), grid_or("8"), chart_opts);
    }
    std::string names;
    for (const auto& s : kSurfaces) names += (names.empty() ? "" : ", ") + s;
    fail(ErrorCode::BadParams, "unknown surface '" + a.surface + "'; valid surfaces: " + names);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks of a sharp trace-free matrix inequality and rotational energies"};
    app.require_subcommand(1);
    std::optional<int> threads_flag;
    app.add_option("--threads", threads_flag, "Worker threads (default: RIGIDITY_THREADS or hardware)");

    VerifyConfig vcfg;
    std::string dims_text = "4,5,6";
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Randomized inequality and identity campaign");
    verify->add_option("--n", dims_text, "Comma-separated dimensions");
    verify->add_option("--samples", vcfg.samples, "Matrices per dimension")->required();
    verify->add_option("--seed", vcfg.seed, "Campaign seed")->required();
    verify->add_option("--family-stride", vcfg.family_stride, "Every k-th matrix is an equality-family member");
    verify->add_option("--out", verify_out, "Report path (stdout if omitted)");
    verify->add_option("--threads", threads_flag, "Worker threads");

    CatalogArgs cargs;
    auto* catalog = app.add_subcommand("catalog", "Build a sampled hypersurface field");
    catalog->add_option("--surface", cargs.surface, "sphere|cylinder|catenoid|rotation|ellipsoid|sphere-chart|cylinder-chart")
        ->required();
    catalog->add_option("--n", cargs.n, "Hypersurface dimension");
    catalog->add_option("--grid", cargs.grid, "Sample counts per direction, e.g. 64x32");
    catalog->add_option("--out", cargs.out, "Field file")->required();
    catalog->add_option("--r", cargs.r, "Radius");
    catalog->add_option("--height", cargs.height, "Cylinder height");
    catalog->add_option("--coeffs", cargs.coeffs, "Polynomial profile coefficients c0,c1,...")->delimiter(',');
    catalog->add_option("--tmin", cargs.t_min, "Profile interval start");
    catalog->add_option("--tmax", cargs.t_max, "Profile interval end");
    catalog->add_option("--axes", cargs.axes, "Ellipsoid semi-axes (n + 1 values)")->delimiter(',');
    catalog->add_option("--profile-tol", cargs.profile_tol, "Catenoid minimality tolerance");
    catalog->add_option("--extent", cargs.extent, "Catenoid patch as a fraction of its full half-height");
    catalog->add_option("--fd-step", cargs.fd_step, "Relative finite-difference step for charts");
    catalog->add_option("--threads", threads_flag, "Worker threads");

    std::string field_path, analyze_out, csv_out;
    std::optional<double> assert_zero;
    auto* analyze = app.add_subcommand("analyze", "Rotational energies of a field file");
    analyze->add_option("--field", field_path, "Field file")->required();
    analyze->add_option("--out", analyze_out, "Report path (stdout if omitted)");
    analyze->add_option("--csv", csv_out, "Per-sample CSV export");
    analyze->add_option("--assert-zero", assert_zero, "Exit 1 unless E_rot_conf <= tol * scale");
    analyze->add_option("--threads", threads_flag, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const int threads = resolve_threads(threads_flag);
    try {
        if (*verify) {
            vcfg.dims.clear();
            std::stringstream ss(dims_text);
            std::string part;
            while (std::getline(ss, part, ',')) {
                try {
                    vcfg.dims.push_back(std::stoi(part));
                } catch (const std::exception&) {
                    fail(ErrorCode::BadParams, "--n must be a comma-separated list of integers");
                }
            }
            vcfg.threads = threads;
            const VerifyOutcome outcome = run_verify(vcfg);
            const std::string text = dump_report(outcome.report);
            if (verify_out.empty()) {
                out << text;
            } else {
                write_text(verify_out, text);
            }
            if (!outcome.passed) err << "verify: at least one check family failed\n";
            return outcome.passed ? kExitPass : kExitCheckFailure;
        }
        if (*catalog) {
            const ShapeField field = build_catalog(cargs, threads);
            write_field(field, cargs.out);
            out << "wrote " << field.samples.size() << " samples to " << cargs.out << '\n';
            return kExitPass;
        }
        if (*analyze) {
            if (assert_zero && !(*assert_zero > 0.0)) fail(ErrorCode::BadParams, "--assert-zero tolerance must be positive");
            const ShapeField field = ingest_field(field_path);
            const EnergyReport report = rotational_energy(field, Tolerances{}, threads);
            json doc = report_header("analyze");
            doc["field"] = field_path;
            doc["surface"] = std::string(to_string(field.spec.kind));
            doc["energy"] = to_json(report);
            const std::string text = dump_report(doc);
            if (analyze_out.empty()) {
                out << text;
            } else {
                write_text(analyze_out, text);
            }
            if (!csv_out.empty()) write_text(csv_out, to_csv(report, field));
            if (assert_zero && report.e_rot_conf > *assert_zero * report.conformal_scale) {
                err << "analyze: E_rot_conf = " << report.e_rot_conf << " exceeds " << *assert_zero << " x scale "
                    << report.conformal_scale << '\n';
                return kExitCheckFailure;
            }
            return kExitPass;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rigidity::cli
