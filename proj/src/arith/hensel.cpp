#include "gl2tors/arith/hensel.hpp"

#include "gl2tors/errors.hpp"

namespace gl2tors {

namespace {

ModPoly at(const Integer& modulus, const ModPoly& p) { return ModPoly(modulus, p.coefficients()); }

// Keep only coefficients up to the given degree (higher ones vanish
// modulo the current precision when the factorization is monic).
ModPoly truncate(const ModPoly& p, int degree) {
    std::vector<Integer> c = p.coefficients();
    if (static_cast<int>(c.size()) > degree + 1) c.resize(static_cast<size_t>(degree) + 1);
    return ModPoly(p.modulus(), std::move(c));
}

}  // namespace

std::pair<ModPoly, ModPoly> hensel_lift_pair(const IntPoly& f, const ModPoly& g, const ModPoly& h, int precision) {
    if (precision < 1) fail(ErrorKind::InvalidArgument, "hensel: precision must be >= 1");
    const Integer& ell = g.modulus();
    if (!g.is_monic() || !h.is_monic()) fail(ErrorKind::InvalidArgument, "hensel: blocks must be monic");
    if (!(ModPoly(ell, f) == g * h)) fail(ErrorKind::InvalidArgument, "hensel: blocks do not multiply to f mod ell");

    auto [d, s, t] = xgcd(g, h);
    if (!d.is_one())
        fail(ErrorKind::LiftingFailure, "hensel: blocks " + g.to_string() + " and " + h.to_string() + " share a factor mod ell");

    Integer target = power(ell, static_cast<unsigned long>(precision));
    ModPoly G = g, H = h, S = s, T = t;
    Integer mod = ell;
    const int dg = g.degree();
    while (mod < target) {
        Integer next = mod * mod;
        if (next > target) next = target;
        G = at(next, G);
        H = at(next, H);
        S = at(next, S);
        T = at(next, T);
        ModPoly F(next, f);

        ModPoly e = F - G * H;
        auto [q, r] = divmod(S * e, H);
        G = truncate(G + T * e + q * G, dg);
        H = H + r;

        ModPoly one = ModPoly::one(next);
        ModPoly b = S * G + T * H - one;
        auto [c, dd] = divmod(S * b, H);
        S = S - dd;
        T = truncate(T - T * b - c * G, dg);
        mod = next;
    }
    return {at(target, G), at(target, H)};
}

std::vector<ModPoly> hensel_lift_blocks(const IntPoly& f, const std::vector<ModPoly>& blocks, int precision) {
    if (blocks.empty()) fail(ErrorKind::InvalidArgument, "hensel: no blocks");
    if (precision < 1) fail(ErrorKind::InvalidArgument, "hensel: precision must be >= 1");
    const Integer& ell = blocks.front().modulus();
    Integer target = power(ell, static_cast<unsigned long>(precision));

    ModPoly product = ModPoly::one(ell);
    for (const auto& b : blocks) {
        if (!b.is_monic()) fail(ErrorKind::InvalidArgument, "hensel: block " + b.to_string() + " not monic");
        product = product * b;
    }
    if (!(product == ModPoly(ell, f)))
        fail(ErrorKind::InvalidArgument, "hensel: blocks do not multiply to f mod " + ell.get_str());

    std::vector<ModPoly> out;
    if (blocks.size() == 1) {
        out.emplace_back(target, f);
        return out;
    }
    // Peel one block at a time: current = block_i * (rest), lifted at full
    // precision, then continue on the lifted cofactor.
    IntPoly current = f;
    for (size_t i = 0; i + 1 < blocks.size(); ++i) {
        ModPoly rest = ModPoly::one(ell);
        for (size_t j = i + 1; j < blocks.size(); ++j) rest = rest * blocks[j];
        auto [lifted, cofactor] = hensel_lift_pair(current, blocks[i], rest, precision);
        out.push_back(std::move(lifted));
        current = cofactor.lift();
    }
    out.emplace_back(target, current);
    return out;
}

}  // namespace gl2tors
