#pragma once

#include <cstdint>
#include <vector>

#include "gl2tors/arith/mod_poly.hpp"

namespace gl2tors {

struct ModFactor {
    ModPoly factor;
    int multiplicity;
};

/// Factor a monic integer polynomial over F_ell into distinct monic
/// irreducibles with multiplicities.
///
/// Squarefree decomposition, then distinct-degree, then randomized
/// equal-degree splitting (trace map in characteristic 2). The result is
/// sorted with canonical_less, so it does not depend on the seed.
std::vector<ModFactor> factor_mod_ell(const IntPoly& f, const Integer& ell, std::uint64_t seed = 0);

/// Squarefree decomposition over F_ell of a monic polynomial: pairs
/// (squarefree monic part, multiplicity), parts pairwise coprime.
std::vector<ModFactor> squarefree_decomposition(const ModPoly& f);

/// Distinct-degree factorization of a squarefree monic polynomial over F_ell:
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree_factorization(const ModPoly& f);

}  // namespace gl2tors
