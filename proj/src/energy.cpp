#include "rigidity/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rigidity/compensated_sum.hpp"
#include "rigidity/error.hpp"
#include "rigidity/parallel.hpp"
#include "rigidity/spectral.hpp"

namespace rigidity {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::AllUmbilic: return "AllUmbilic";
        case Classification::RotationCandidate: return "RotationCandidate";
        case Classification::CatenoidCandidate: return "CatenoidCandidate";
        case Classification::Generic: return "Generic";
    }
    return "Generic";
}

double conformal_weight(double norm_sq, int n) {
    if (n == 4) return 1.0;
    if (norm_sq <= 0.0) return 0.0;
    if (n == 6) return norm_sq;
    return std::pow(norm_sq, 0.5 * (n - 4));
}

EnergyReport rotational_energy(const ShapeField& field, const Tolerances& tol, int threads) {
    try {
        validate_field(field, tol);
    } catch (const Error& e) {
        fail(ErrorCode::InvalidField, e.what());
    }
    const int n = field.dim();
    if (n < 4) fail(ErrorCode::InvalidField, "energies need n >= 4");
    const double c = main_constant(n);

    EnergyReport report;
    report.n = n;
    report.tolerances = tol;
    report.minimal_claimed = field.minimal_claimed;
    report.pointwise.resize(field.samples.size());

    parallel_for(field.samples.size(), threads, [&](std::size_t i) {
        const SymMatrix& a = field.samples[i].shape_operator;
        const SymMatrix traceless = trace_free_project(a);
        const MatrixNorms nm = norms(traceless);
        const MainInequalityResult check = main_inequality(traceless, tol, std::sqrt(a.frobenius_sq()));
        PointwiseRecord& rec = report.pointwise[i];
        rec.norm_sq = nm.norm_sq;
        rec.square_norm_sq = nm.square_norm_sq;
        rec.defect = c * nm.norm_sq * nm.norm_sq - nm.square_norm_sq;
        rec.relative_defect = check.verdict.relative_defect;
        rec.conformal_factor = conformal_weight(nm.norm_sq, n);
        rec.umbilic = is_umbilic(a, tol.umbilic);
        rec.kind = rec.umbilic ? EqualityKind::Zero : check.equality_case.kind;
    });

    CompensatedSum e_rot, e_conf, scale, conf_scale;
    report.max_relative_defect = -std::numeric_limits<double>::infinity();
    report.min_relative_defect = std::numeric_limits<double>::infinity();
    bool all_umbilic = true;
    bool any_umbilic = false;
    bool all_multiplicity = true;
    for (std::size_t i = 0; i < field.samples.size(); ++i) {
        const double w = field.samples[i].area_weight;
        const PointwiseRecord& rec = report.pointwise[i];
        e_rot.add(w * rec.defect);
        e_conf.add(w * rec.conformal_factor * rec.defect);
        const double norm4 = rec.norm_sq * rec.norm_sq;
        scale.add(w * std::max(1.0, norm4));
        conf_scale.add(w * std::max(1.0, std::pow(rec.norm_sq, 0.5 * n)));
        report.max_relative_defect = std::max(report.max_relative_defect, rec.relative_defect);
        report.min_relative_defect = std::min(report.min_relative_defect, rec.relative_defect);
        all_umbilic = all_umbilic && rec.umbilic;
        any_umbilic = any_umbilic || rec.umbilic;
        all_multiplicity = all_multiplicity && rec.kind != EqualityKind::None;
    }
    report.e_rot = e_rot.value();
    report.e_rot_conf = e_conf.value();
    report.quadrature_scale = scale.value();
    report.conformal_scale = conf_scale.value();
    report.nowhere_umbilic_on_samples = !any_umbilic;

    if (all_umbilic) {
        report.classification = Classification::AllUmbilic;
    } else if (all_multiplicity) {
        report.classification = field.minimal_claimed ? Classification::CatenoidCandidate : Classification::RotationCandidate;
    } else {
        report.classification = Classification::Generic;
    }
    return report;
}

ShapeField conformal_rescale(const ShapeField& field, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) fail(ErrorCode::BadParams, "rescale factor must be positive");
    ShapeField out = field;
    const double weight_factor = std::pow(t, field.dim());
    for (auto& s : out.samples) {
        s.shape_operator *= 1.0 / t;
        s.area_weight *= weight_factor;
    }
    out.spec.params["conformal_factor"] = t * (field.spec.params.contains("conformal_factor")
                                                   ? field.spec.params.at("conformal_factor")
                                                   : 1.0);
    return out;
}

nlohmann::json to_json(const EnergyReport& report) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& rec : report.pointwise) {
        samples.push_back({{"norm_sq", rec.norm_sq},
                           {"square_norm_sq", rec.square_norm_sq},
                           {"defect", rec.defect},
                           {"relative_defect", rec.relative_defect},
                           {"equality_kind", std::string(to_string(rec.kind))},
                           {"umbilic", rec.umbilic}});
    }
    return {{"n", report.n},
            {"E_rot", report.e_rot},
            {"E_rot_conf", report.e_rot_conf},
            {"quadrature_scale", report.quadrature_scale},
            {"conformal_scale", report.conformal_scale},
            {"E_rot_is_zero", report.e_rot_is_zero()},
            {"E_rot_conf_is_zero", report.e_rot_conf_is_zero()},
            {"max_relative_defect", report.max_relative_defect},
            {"min_relative_defect", report.min_relative_defect},
            {"classification", std::string(to_string(report.classification))},
            {"nowhere_umbilic_on_samples", report.nowhere_umbilic_on_samples},
            {"minimal_claimed", report.minimal_claimed},
            {"tolerances", to_json(report.tolerances)},
            {"pointwise", std::move(samples)}};
}

std::string to_csv(const EnergyReport& report, const ShapeField& field) {
    if (report.pointwise.size() != field.samples.size()) fail(ErrorCode::DimensionMismatch, "report does not match field");
    std::size_t ncoords = 0;
    for (const auto& s : field.samples) ncoords = std::max(ncoords, s.coords.size());
    std::ostringstream out;
    out.precision(17);
    for (std::size_t k = 0; k < ncoords; ++k) out << "coord" << k << ',';
    out << "norm_sq,square_norm_sq,defect,equality_kind\n";
    for (std::size_t i = 0; i < field.samples.size(); ++i) {
        const auto& coords = field.samples[i].coords;
        for (std::size_t k = 0; k < ncoords; ++k) {
            if (k < coords.size()) out << coords[k];
            out << ',';
        }
        const auto& rec = report.pointwise[i];
        out << rec.norm_sq << ',' << rec.square_norm_sq << ',' << rec.defect << ',' << to_string(rec.kind) << '\n';
    }
    return out.str();
}

}  // namespace rigidity
