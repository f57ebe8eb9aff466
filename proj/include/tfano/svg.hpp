#pragma once

#include "tfano/divpolytope.hpp"

#include <string>

namespace tfano {

// One panel per non-trivial slice plus the tail fan with deg S shaded. Rank 2 only.
std::string render_svg(const FDivisor& s);
// Box with the linearity regions of every Ψ_P and the values at the vertices. Rank 2 only.
std::string render_svg(const DivisorialPolytope& psi);

}  // namespace tfano
