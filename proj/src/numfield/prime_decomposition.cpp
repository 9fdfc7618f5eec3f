#include "gl2tors/numfield/prime_decomposition.hpp"

#include "gl2tors/arith/factor_mod.hpp"
#include "gl2tors/arith/hensel.hpp"
#include "gl2tors/arith/resultant.hpp"
#include "gl2tors/errors.hpp"

namespace gl2tors {

namespace {

bool dedekind_from_factors(const IntPoly& f, const Integer& ell, const std::vector<ModFactor>& factors) {
    ModPoly g_bar = ModPoly::one(ell), h_bar = ModPoly::one(ell);
    for (const auto& [p, e] : factors) {
        g_bar = g_bar * p;
        if (e > 1) h_bar = h_bar * pow(p, static_cast<unsigned>(e - 1));
    }
    IntPoly g = g_bar.lift(), h = h_bar.lift();
    IntPoly diff = g * h - f;
    for (const auto& c : diff.coefficients())
        if (c % ell != 0) fail(ErrorKind::InternalConsistency, "dedekind: factorization does not reproduce f mod ell");
    ModPoly defect(ell, diff.divexact(ell));
    ModPoly z = gcd(gcd(defect, g_bar), h_bar);
    return z.degree() == 0;
}

}  // namespace

bool PrimeDecomposition::inert(int field_degree) const {
    return primes.size() == 1 && primes[0].e == 1 && primes[0].f == field_degree;
}

bool dedekind_criterion(const IntPoly& f, const Integer& ell, std::uint64_t seed) {
    return dedekind_from_factors(f, ell, factor_mod_ell(f, ell, seed));
}

LocalPrime LocalPrime::at_precision(const NumberField& field, int m) const {
    const IntPoly& f = field.defining_poly();
    ModPoly block = pow(residue_factor, static_cast<unsigned>(e));
    LocalPrime out = *this;
    out.precision = m;
    if (block.degree() == f.degree()) {
        out.lifted_block = ModPoly(power(ell, static_cast<unsigned long>(m)), f);
        return out;
    }
    ModPoly cofactor = ModPoly(ell, f) / block;
    out.lifted_block = hensel_lift_pair(f, block, cofactor, m).first;
    return out;
}

PrimeDecomposition decompose_prime(const NumberField& field, const Integer& ell, int initial_precision,
                                   std::uint64_t seed) {
    if (!is_prime(ell)) fail(ErrorKind::InvalidArgument, "decompose_prime: " + ell.get_str() + " is not prime");
    const IntPoly& f = field.defining_poly();
    auto factors = factor_mod_ell(f, ell, seed);

    PrimeDecomposition out;
    out.ell = ell;
    out.maximal_at_ell = dedekind_from_factors(f, ell, factors);
    if (!out.maximal_at_ell) return out;

    std::vector<ModPoly> blocks;
    blocks.reserve(factors.size());
    for (const auto& [p, e] : factors) blocks.push_back(pow(p, static_cast<unsigned>(e)));
    auto lifted = hensel_lift_blocks(f, blocks, initial_precision);
    for (size_t i = 0; i < factors.size(); ++i) {
        out.primes.push_back(LocalPrime{ell, factors[i].factor, factors[i].multiplicity, factors[i].factor.degree(),
                                        std::move(lifted[i]), initial_precision});
    }
    return out;
}

LambdaValuation valuation_at(const NumberField& field, const LocalPrime& lambda, const FieldElement& a) {
    if (a.is_zero()) fail(ErrorKind::InfiniteValuation, "lambda valuation of zero");
    if (!(a.field_poly() == field.defining_poly())) fail(ErrorKind::InvalidArgument, "lambda valuation: field mismatch");
    LocalPrime current = lambda;
    for (;;) {
        Integer r = resultant(current.lifted_block.lift(), a.numerator());
        if (r != 0) {
            long v = int_valuation(r, current.ell);
            if (v < current.precision - 1) {
                long shift = static_cast<long>(current.lifted_block.degree()) * int_valuation(a.denominator(), current.ell);
                long scaled = v - shift;
                if (scaled % current.f != 0)
                    fail(ErrorKind::InternalConsistency,
                         "lambda valuation: local norm valuation " + std::to_string(scaled) +
                             " not divisible by inertia degree " + std::to_string(current.f));
                return {scaled / current.f, std::move(current)};
            }
        }
        int next = current.precision * 2;
        if (next > kMaxPrecision)
            fail(ErrorKind::InternalConsistency, "lambda valuation: precision cap " + std::to_string(kMaxPrecision) +
                                                     " exceeded for " + a.to_string());
        current = current.at_precision(field, next);
    }
}

long lambda_valuation(const NumberField& field, const LocalPrime& lambda, const FieldElement& a) {
    return valuation_at(field, lambda, a).value;
}

}  // namespace gl2tors
