#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rigidity/spectral.hpp"
#include "rigidity/tolerances.hpp"

namespace rigidity {

/// Outcome of checking one inequality lhs <= rhs. defect = rhs − lhs, so a
/// nonnegative defect means the inequality holds.
struct InequalityVerdict {
    double lhs = 0.0;
    double rhs = 0.0;
    double defect = 0.0;
    double scale = 1.0;
    double relative_defect = 0.0;
    bool holds = true;
    bool equality = true;
    double tol = 0.0;
};

InequalityVerdict make_verdict(double lhs, double rhs, double scale, double tol);

enum class EqualityKind {
    Zero,
    EigenspaceDimAtLeastNMinus1,
    EigenspaceDimExactlyNMinus1,
    ProportionalToIdentity,
    KernelDimAtLeast,
    None,
};

std::string_view to_string(EqualityKind kind);
EqualityKind equality_kind_from_string(std::string_view name);

struct EigenPair {
    double mu = 0.0;  // eigenvalue of multiplicity n − 1
    double nu = 0.0;  // the remaining eigenvalue
};

struct EqualityCase {
    EqualityKind kind = EqualityKind::None;
    std::vector<int> multiplicities;
    std::optional<EigenPair> detail;
};

struct CheckResult {
    InequalityVerdict verdict;
    EqualityCase equality_case;
};

/// (n² − 3n + 3) / (n(n − 1)).
double main_constant(int n);

/// Structural equality case of a trace-free matrix from its clustered spectrum:
/// Zero when |Å| <= umbilic_tol, otherwise the multiplicity pattern.
EqualityCase classify_trace_free(const Spectrum& spec, double norm_sq, double umbilic_tol);

/// p_k² >= p_{k−1} p_{k+1}, 1 <= k <= n − 1. The equality case is read from
/// the spectrum of the same matrix the profile describes.
CheckResult newton_gap(const SymFunProfile& profile, const Spectrum& spec, int k, const Tolerances& tol = {});

/// (tr Å³)² <= ((n − 2)² / (n(n − 1))) |Å|⁶.
InequalityVerdict cubic_bound(const MatrixNorms& traceless_norms, int n, const Tolerances& tol = {});

/// p_3² + 4 p_2³ <= 0 for p_1 = 0.
CheckResult prop_p3(const SymFunProfile& profile, const Spectrum& spec, const Tolerances& tol = {});

/// p_4 + 3 p_2² >= 0 for p_1 = 0, n >= 4.
CheckResult prop_p4(const SymFunProfile& profile, const Spectrum& spec, const Tolerances& tol = {});

struct LambdaScan {
    std::vector<double> lambdas;
    std::vector<double> q;        // p_2² − λ p_3 − λ² p_2 per grid value
    std::vector<double> q_scale;  // max(1, sum of |terms|) per grid value
    double step2_product = 0.0;   // (3p_3² − 4p_2p_4)(p_3² + 4p_2³)
    double step2_scale = 1.0;
};

LambdaScan lambda_scan(const SymFunProfile& profile, const std::vector<double>& lambda_grid,
                       const Tolerances& tol = {});

struct MainInequalityResult {
    InequalityVerdict verdict;
    EqualityCase equality_case;
    /// binom(n,4)(p_4 + 3p_2²) + ¼(|Å²|² − c_n|Å|⁴); should vanish.
    double bridge_residual = 0.0;
    double bridge_scale = 1.0;
    bool bridge_ok = true;
};

/// |Å²|² <= c_n |Å|⁴ with equality iff Å has an eigenspace of dimension >= n − 1.
/// The verdict scale is |Å|⁴ itself (1 for Å = 0) so the verdict is invariant
/// under Å → tÅ.
MainInequalityResult main_inequality(const SymMatrix& traceless, const Tolerances& tol = {});

/// As above for Å = trace_free_project(A): the trace-free precondition is
/// judged against max(|Å|, reference_norm), reference_norm being |A|.
MainInequalityResult main_inequality(const SymMatrix& traceless, const Tolerances& tol, double reference_norm);

struct SigmaNormResiduals {
    double r2 = 0.0;  // σ_2 + ½|Å|²
    double r4 = 0.0;  // σ_4 − ⅛|Å|⁴ + ¼|Å²|²
    double scale = 1.0;
};

SigmaNormResiduals sigma_norm_identities(const SymMatrix& traceless, const Tolerances& tol = {});

/// Throws NotTraceFree unless |tr A| <= tol.trace_free · n · max(|A|, reference_norm).
void require_trace_free(const SymMatrix& a, const Tolerances& tol, double reference_norm = 0.0);

}  // namespace rigidity
