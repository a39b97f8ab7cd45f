#include "rigidity/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {

InequalityVerdict make_verdict(double lhs, double rhs, double scale, double tol) {
    InequalityVerdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.defect = rhs - lhs;
    v.scale = scale;
    v.relative_defect = v.defect / scale;
    v.tol = tol;
    v.holds = v.defect >= -tol * scale;
    v.equality = std::abs(v.defect) <= tol * scale;
    return v;
}

std::string_view to_string(EqualityKind kind) {
    switch (kind) {
        case EqualityKind::Zero: return "Zero";
        case EqualityKind::EigenspaceDimAtLeastNMinus1: return "EigenspaceDimAtLeastNMinus1";
        case EqualityKind::EigenspaceDimExactlyNMinus1: return "EigenspaceDimExactlyNMinus1";
        case EqualityKind::ProportionalToIdentity: return "ProportionalToIdentity";
        case EqualityKind::KernelDimAtLeast: return "KernelDimAtLeast";
        case EqualityKind::None: return "None";
    }
    return "None";
}

EqualityKind equality_kind_from_string(std::string_view name) {
    for (auto k : {EqualityKind::Zero, EqualityKind::EigenspaceDimAtLeastNMinus1,
                   EqualityKind::EigenspaceDimExactlyNMinus1, EqualityKind::ProportionalToIdentity,
                   EqualityKind::KernelDimAtLeast, EqualityKind::None}) {
        if (to_string(k) == name) return k;
    }
    fail(ErrorCode::SchemaError, "unknown equality kind '" + std::string(name) + "'");
}

double main_constant(int n) {
    const double dn = n;
    return (dn * dn - 3.0 * dn + 3.0) / (dn * (dn - 1.0));
}

namespace {

void require_profile_trace_free(const SymFunProfile& prof, const Tolerances& tol) {
    // |p_1| against the RMS eigenvalue sqrt(s_2 / n).
    const double rms = std::sqrt(std::max(0.0, prof.s(2)) / prof.n);
    if (std::abs(prof.p[1]) > tol.trace_free * std::max(1.0, rms)) {
        fail(ErrorCode::NotTraceFree, "p_1 = " + std::to_string(prof.p[1]) + " is not zero");
    }
}

EqualityCase multiplicity_case(const Spectrum& spec) {
    EqualityCase ec;
    ec.multiplicities = spec.multiplicities();
    return ec;
}

}  // namespace

void require_trace_free(const SymMatrix& a, const Tolerances& tol, double reference_norm) {
    const double tr = a.trace();
    if (std::abs(tr) > tol.trace_free * a.dim() * std::max(std::sqrt(a.frobenius_sq()), reference_norm)) {
        fail(ErrorCode::NotTraceFree, "trace " + std::to_string(tr) + " is not zero");
    }
}

EqualityCase classify_trace_free(const Spectrum& spec, double norm_sq, double umbilic_tol) {
    EqualityCase ec = multiplicity_case(spec);
    const int n = spec.dim();
    if (std::sqrt(norm_sq) <= umbilic_tol) {
        ec.kind = EqualityKind::Zero;
        return ec;
    }
    const int m = spec.max_multiplicity();
    if (m == n - 1) {
        ec.kind = EqualityKind::EigenspaceDimExactlyNMinus1;
        EigenPair pair;
        for (const auto& c : spec.clusters) {
            double mean = 0.0;
            for (int i : c) mean += spec.eigenvalues[i];
            mean /= static_cast<double>(c.size());
            if (static_cast<int>(c.size()) == n - 1) {
                pair.mu = mean;
            } else {
                pair.nu = mean;
            }
        }
        ec.detail = pair;
    } else if (m >= n - 1) {
        ec.kind = EqualityKind::EigenspaceDimAtLeastNMinus1;
    } else {
        ec.kind = EqualityKind::None;
    }
    return ec;
}

CheckResult newton_gap(const SymFunProfile& profile, const Spectrum& spec, int k, const Tolerances& tol) {
    const int n = profile.n;
    if (k < 1 || k > n - 1) {
        fail(ErrorCode::BadIndex, "Newton index k=" + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]");
    }
    const auto& p = profile.p;
    const double lhs = p[k - 1] * p[k + 1];
    const double rhs = p[k] * p[k];
    const double scale = std::max({1.0, rhs, std::abs(lhs)});

    CheckResult out{make_verdict(lhs, rhs, scale, tol.equality), multiplicity_case(spec)};
    if (spec.clusters.size() == 1) {
        out.equality_case.kind = EqualityKind::ProportionalToIdentity;
    } else {
        const double zero = tol.cluster * std::max(1.0, spec.spectral_radius());
        const auto kernel = std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                                          [&](double v) { return std::abs(v) <= zero; });
        out.equality_case.kind = kernel >= n - k + 1 ? EqualityKind::KernelDimAtLeast : EqualityKind::None;
    }
    return out;
}

InequalityVerdict cubic_bound(const MatrixNorms& nm, int n, const Tolerances& tol) {
    if (std::abs(nm.trace) > tol.trace_free * n * std::sqrt(nm.norm_sq)) {
        fail(ErrorCode::NotTraceFree, "trace " + std::to_string(nm.trace) + " is not zero");
    }
    const double dn = n;
    const double norm6 = nm.norm_sq * nm.norm_sq * nm.norm_sq;
    const double lhs = nm.trace_cube * nm.trace_cube;
    const double rhs = (dn - 2.0) * (dn - 2.0) / (dn * (dn - 1.0)) * norm6;
    return make_verdict(lhs, rhs, std::max(1.0, norm6), tol.equality);
}

CheckResult prop_p3(const SymFunProfile& profile, const Spectrum& spec, const Tolerances& tol) {
    require_profile_trace_free(profile, tol);
    const double p2 = profile.p[2];
    const double p3 = profile.p[3];
    const double lhs = p3 * p3 + 4.0 * p2 * p2 * p2;
    const double scale = std::max({1.0, std::abs(p2 * p2 * p2), p3 * p3});
    return {make_verdict(lhs, 0.0, scale, tol.equality),
            classify_trace_free(spec, std::max(0.0, profile.s(2)), tol.umbilic)};
}

CheckResult prop_p4(const SymFunProfile& profile, const Spectrum& spec, const Tolerances& tol) {
    if (profile.n < 4) fail(ErrorCode::BadDimension, "p_4 inequality needs n >= 4");
    require_profile_trace_free(profile, tol);
    const double p2 = profile.p[2];
    const double p4 = profile.p[4];
    const double rhs = p4 + 3.0 * p2 * p2;
    return {make_verdict(0.0, rhs, std::max(1.0, p2 * p2), tol.equality),
            classify_trace_free(spec, std::max(0.0, profile.s(2)), tol.umbilic)};
}

LambdaScan lambda_scan(const SymFunProfile& profile, const std::vector<double>& lambda_grid, const Tolerances& tol) {
    require_profile_trace_free(profile, tol);
    const double p2 = profile.p[2];
    const double p3 = profile.p[3];
    const double p4 = profile.n >= 4 ? profile.p[4] : 0.0;

    LambdaScan out;
    out.lambdas = lambda_grid;
    out.q.reserve(lambda_grid.size());
    out.q_scale.reserve(lambda_grid.size());
    for (double lambda : lambda_grid) {
        const double a = p2 * p2;
        const double b = lambda * p3;
        const double c = lambda * lambda * p2;
        out.q.push_back(a - b - c);
        out.q_scale.push_back(std::max(1.0, std::abs(a) + std::abs(b) + std::abs(c)));
    }
    const double left = 3.0 * p3 * p3 - 4.0 * p2 * p4;
    const double right = p3 * p3 + 4.0 * p2 * p2 * p2;
    out.step2_product = left * right;
    out.step2_scale = std::max(1.0, (3.0 * p3 * p3 + 4.0 * std::abs(p2 * p4)) * (p3 * p3 + 4.0 * std::abs(p2 * p2 * p2)));
    return out;
}

MainInequalityResult main_inequality(const SymMatrix& traceless, const Tolerances& tol) {
    return main_inequality(traceless, tol, 0.0);
}

MainInequalityResult main_inequality(const SymMatrix& traceless, const Tolerances& tol, double reference_norm) {
    const int n = traceless.dim();
    if (n < 4) fail(ErrorCode::BadDimension, "main inequality needs n >= 4");
    require_trace_free(traceless, tol, reference_norm);

    const MatrixNorms nm = norms(traceless);
    const double c = main_constant(n);
    const double norm4 = nm.norm_sq * nm.norm_sq;
    const double lhs = nm.square_norm_sq;
    const double rhs = c * norm4;
    const double scale = (norm4 > 0.0 && std::isnormal(norm4)) ? norm4 : 1.0;

    const Spectrum spec = eigen_spectrum(traceless, tol.cluster);
    const SymFunProfile prof = symfun_from_spectrum(spec);

    MainInequalityResult out;
    out.verdict = make_verdict(lhs, rhs, scale, tol.equality);
    out.equality_case = classify_trace_free(spec, nm.norm_sq, tol.umbilic);
    if (out.verdict.equality && out.equality_case.kind == EqualityKind::None) {
        // The defect is quadratic in the eigenvalue spread, so the verdict sees
        // equality at a spread of about sqrt(tol.equality); read the structure
        // at that resolution too rather than contradict the verdict.
        const double rho = spec.spectral_radius();
        const double rel = std::max(tol.cluster, 10.0 * std::sqrt(tol.equality)) * rho / std::max(1.0, rho);
        const Spectrum coarse = make_spectrum(spec.eigenvalues, std::max(rel, tol.cluster));
        out.equality_case = classify_trace_free(coarse, nm.norm_sq, tol.umbilic);
    }
    out.bridge_residual = binomial(n, 4) * (prof.p[4] + 3.0 * prof.p[2] * prof.p[2]) + 0.25 * (lhs - rhs);
    out.bridge_scale = std::max(1.0, norm4);
    out.bridge_ok = std::abs(out.bridge_residual) <= tol.identity * out.bridge_scale;
    return out;
}

SigmaNormResiduals sigma_norm_identities(const SymMatrix& traceless, const Tolerances& tol) {
    if (traceless.dim() < 4) fail(ErrorCode::BadDimension, "sigma_4 identity needs n >= 4");
    require_trace_free(traceless, tol);
    const MatrixNorms nm = norms(traceless);
    const SymFunProfile prof = symfun_from_spectrum(eigen_spectrum(traceless, tol.cluster));
    SigmaNormResiduals out;
    out.r2 = prof.sigma[2] + 0.5 * nm.norm_sq;
    out.r4 = prof.sigma[4] - 0.125 * nm.norm_sq * nm.norm_sq + 0.25 * nm.square_norm_sq;
    out.scale = std::max(1.0, nm.norm_sq * nm.norm_sq);
    return out;
}

}  // namespace rigidity
