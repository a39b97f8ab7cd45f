#pragma once

#include "rigidity/catalog.hpp"

namespace rigidity::detail {

// Sample of a rotation hypersurface in the (t, θ) layout from profile data at t.
SamplePoint make_rotation_sample(int n, double t, double theta, double cell, double f, double df, double d2f,
                                 const Tolerances& tol);

}  // namespace rigidity::detail
