#pragma once

#include <vector>

#include "gl2tors/arith/mod_poly.hpp"

namespace gl2tors {

/// Lift a factorization f = prod(blocks) mod ell of a monic f to one modulo
/// ell^precision with quadratic Hensel steps. Blocks must be monic and
/// pairwise coprime mod ell (otherwise LiftingFailure). The i-th output is
/// the unique monic lift of the i-th block.
std::vector<ModPoly> hensel_lift_blocks(const IntPoly& f, const std::vector<ModPoly>& blocks, int precision);

/// Two-factor case: lifts f = g*h mod ell to precision; returns (G, H).
std::pair<ModPoly, ModPoly> hensel_lift_pair(const IntPoly& f, const ModPoly& g, const ModPoly& h, int precision);

}  // namespace gl2tors
