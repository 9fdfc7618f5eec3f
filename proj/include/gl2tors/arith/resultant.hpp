#pragma once

#include "gl2tors/arith/mod_poly.hpp"

namespace gl2tors {

/// Sylvester resultant of two nonzero integer polynomials, by the
/// subresultant PRS. For monic f this is the product of g over the roots
/// of f. Zero input raises InvalidArgument.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// Resultant of the canonical integer representatives of two ModPolys,
/// reduced modulo their common modulus. Precision reasoning stays with the caller.
Integer resultant(const ModPoly& f, const ModPoly& g);

/// Discriminant-style squarefreeness test over Q: Res(f, f') != 0.
bool is_squarefree(const IntPoly& f);

}  // namespace gl2tors
