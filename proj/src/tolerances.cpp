#include "rigidity/tolerances.hpp"

namespace rigidity {

nlohmann::json to_json(const Tolerances& tol) {
    return {
        {"cluster", tol.cluster},
        {"equality", tol.equality},
        {"holds", tol.holds},
        {"trace_free", tol.trace_free},
        {"umbilic", tol.umbilic},
        {"identity", tol.identity},
        {"tensor_identity", tol.tensor_identity},
        {"minimality", tol.minimality},
        {"jacobi_off", tol.jacobi_off},
        {"energy_zero", tol.energy_zero},
    };
}

}  // namespace rigidity
