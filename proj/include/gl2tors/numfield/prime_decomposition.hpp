#pragma once

#include <cstdint>
#include <vector>

#include "gl2tors/arith/mod_poly.hpp"
#include "gl2tors/numfield/number_field.hpp"

namespace gl2tors {

inline constexpr int kInitialPrecision = 8;
inline constexpr int kMaxPrecision = 512;

/// A prime lambda over ell, given by the residue factor g_i of f mod ell
/// and the ell-adic factor of f lifting g_i^e to precision ell^m.
struct LocalPrime {
    Integer ell;
    ModPoly residue_factor;
    int e = 1;
    int f = 1;
    ModPoly lifted_block;
    int precision = 0;

    /// Same prime, block re-lifted to precision m (from the residue data).
    LocalPrime at_precision(const NumberField& field, int m) const;
};

struct PrimeDecomposition {
    Integer ell;
    /// Empty when the Dedekind criterion fails at ell.
    std::vector<LocalPrime> primes;
    bool maximal_at_ell = false;

    /// Single prime with e = 1, f = g.
    bool inert(int field_degree) const;
};

/// Dedekind criterion: true when ell does not divide [O_F : Z[theta]].
bool dedekind_criterion(const IntPoly& f, const Integer& ell, std::uint64_t seed = 0);

PrimeDecomposition decompose_prime(const NumberField& field, const Integer& ell,
                                   int initial_precision = kInitialPrecision, std::uint64_t seed = 0);

struct LambdaValuation {
    long value;
    /// The prime, possibly re-lifted to a higher precision.
    LocalPrime prime;
};

/// Integer-normalized lambda-adic valuation (v(ell) = e): v_ell of the
/// local norm Res(block, numerator)/denominator^(e f), divided by f.
/// Doubles the precision until the resultant's valuation is below
/// precision - 1; past kMaxPrecision raises InternalConsistency.
LambdaValuation valuation_at(const NumberField& field, const LocalPrime& lambda, const FieldElement& a);

long lambda_valuation(const NumberField& field, const LocalPrime& lambda, const FieldElement& a);

}  // namespace gl2tors
