#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rigidity/catalog.hpp"
#include "rigidity/inequalities.hpp"
#include "rigidity/tolerances.hpp"

namespace rigidity {

enum class Classification { AllUmbilic, RotationCandidate, CatenoidCandidate, Generic };

std::string_view to_string(Classification c);

struct PointwiseRecord {
    double norm_sq = 0.0;         // |Å|²
    double square_norm_sq = 0.0;  // |Å²|²
    double defect = 0.0;          // c_n|Å|⁴ − |Å²|²
    double relative_defect = 0.0;
    double conformal_factor = 0.0;  // |Å|^{n−4}
    EqualityKind kind = EqualityKind::None;
    bool umbilic = false;
};

struct EnergyReport {
    int n = 0;
    double e_rot = 0.0;
    double e_rot_conf = 0.0;
    double quadrature_scale = 0.0;  // Σ w max(1, |Å|⁴)
    double conformal_scale = 0.0;   // Σ w max(1, |Å|ⁿ)
    std::vector<PointwiseRecord> pointwise;
    double max_relative_defect = 0.0;
    double min_relative_defect = 0.0;
    Classification classification = Classification::Generic;
    /// No sample is umbilic. Only a statement about the samples.
    bool nowhere_umbilic_on_samples = false;
    bool minimal_claimed = false;
    Tolerances tolerances;

    bool e_rot_is_zero() const { return e_rot <= tolerances.energy_zero * quadrature_scale; }
    bool e_rot_conf_is_zero() const { return e_rot_conf <= tolerances.energy_zero * conformal_scale; }
};

/// |Å|^{n−4}, with the continuous value at Å = 0 (1 for n = 4, else 0).
double conformal_weight(double norm_sq, int n);

/// E_rot = Σ w_p (c_n|Å_p|⁴ − |Å_p²|²) and E_rot^conf = Σ w_p |Å_p|^{n−4}(…),
/// integrands evaluated in parallel, sums compensated in sample order.
EnergyReport rotational_energy(const ShapeField& field, const Tolerances& tol = {}, int threads = 1);

/// Same immersion under the ambient metric t²·g: A → A/t, w → tⁿ w.
ShapeField conformal_rescale(const ShapeField& field, double t);

nlohmann::json to_json(const EnergyReport& report);

/// One row per sample: coords, |Å|², |Å²|², defect, equality kind.
std::string to_csv(const EnergyReport& report, const ShapeField& field);

}  // namespace rigidity
