#pragma once

#include "ecp/ecc/step_function.hpp"
#include "ecp/geometry/alpha.hpp"

namespace ecp {

// Euler characteristic curve chi(r) of the filtered complex: each simplex
// contributes (-1)^dim from its filtration value onward.  chi(0) equals the
// merged point count and chi(r) = 1 once the full complex is present.
StepFunction ecc(const Filtration& filt);

}  // namespace ecp
