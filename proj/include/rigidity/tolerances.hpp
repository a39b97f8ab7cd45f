#pragma once

#include <json.hpp>

namespace rigidity {

// Default numerical thresholds. Every report echoes the table it was produced with.
struct Tolerances {
    double cluster = 1e-8;           // eigenvalue clustering, relative to max(1, spectral radius)
    double equality = 1e-10;         // inequality verdicts: |defect| <= equality * scale
    double holds = 1e-12;            // campaign acceptance: relative defect >= -holds
    double trace_free = 1e-10;       // |tr| <= trace_free * n * |A|
    double umbilic = 1e-10;          // |Å| <= umbilic * max(1, |A|)
    double identity = 1e-10;         // sigma/bridge residuals, relative to max(1, |Å|^4)
    double tensor_identity = 1e-9;   // Kulkarni-Nomizu and Weyl residuals
    double minimality = 1e-8;        // |tr A| <= minimality * (1 + |A|) for minimal fields
    double jacobi_off = 1e-14;       // off-diagonal norm / initial norm
    double energy_zero = 1e-10;      // E <= energy_zero * quadrature scale counts as zero
};

nlohmann::json to_json(const Tolerances& tol);

}  // namespace rigidity
