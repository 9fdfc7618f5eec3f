#include "gl2tors/arith/factor_mod.hpp"

#include <algorithm>
#include <random>

#include "gl2tors/errors.hpp"

namespace gl2tors {

namespace {

// Coefficientwise ell-th root of a polynomial whose derivative vanishes; in a
// prime field every element is its own ell-th power.
ModPoly pth_root(const ModPoly& c) {
    const Integer& ell = c.modulus();
    unsigned long p = ell.get_ui();
    std::vector<Integer> out(static_cast<size_t>(c.degree()) / p + 1);
    for (int i = 0; i <= c.degree(); ++i) {
        if (c.coeff(i) == 0) continue;
        if (static_cast<unsigned long>(i) % p != 0)
            fail(ErrorKind::InternalConsistency, "pth_root: exponent not divisible by characteristic");
        out[static_cast<unsigned long>(i) / p] = c.coeff(i);
    }
    return ModPoly(ell, std::move(out));
}

void squarefree_into(const ModPoly& f, int scale, std::vector<ModFactor>& out) {
    const Integer& ell = f.modulus();
    ModPoly c = gcd(f, f.derivative());
    ModPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        ModPoly y = gcd(w, c);
        ModPoly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i * scale});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        if (!ell.fits_ulong_p())
            fail(ErrorKind::InternalConsistency, "squarefree decomposition: characteristic too large for p-th root");
        squarefree_into(pth_root(c.monic()), scale * static_cast<int>(ell.get_ui()), out);
    }
}

class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(gmp_randinit_default) { state_.seed(seed); }
    ModPoly random_poly(const Integer& ell, int below_degree) {
        std::vector<Integer> c(static_cast<size_t>(below_degree));
        for (auto& x : c) x = state_.get_z_range(ell);
        return ModPoly(ell, std::move(c));
    }

private:
    gmp_randclass state_;
};

void equal_degree_split(const ModPoly& g, int d, SplitRng& rng, std::vector<ModPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const Integer& ell = g.modulus();
    for (;;) {
        ModPoly a = rng.random_poly(ell, g.degree());
        if (a.degree() <= 0) continue;
        ModPoly b;
        if (ell == 2) {
            // Absolute trace F_{2^d} -> F_2: a + a^2 + ... + a^(2^(d-1)).
            ModPoly t = a % g;
            b = t;
            for (int i = 1; i < d; ++i) {
                t = (t * t) % g;
                b += t;
            }
        } else {
            Integer e = (power(ell, static_cast<unsigned long>(d)) - 1) / 2;
            b = powmod(a, e, g) - ModPoly::one(ell);
        }
        ModPoly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModFactor> squarefree_decomposition(const ModPoly& f) {
    std::vector<ModFactor> out;
    if (f.degree() <= 0) return out;
    squarefree_into(f.monic(), 1, out);
    return out;
}

std::vector<std::pair<ModPoly, int>> distinct_degree_factorization(const ModPoly& f) {
    const Integer& ell = f.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly rest = f.monic();
    ModPoly x = ModPoly::x(ell);
    ModPoly h = x % rest;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        h = powmod(h, ell, rest);
        ModPoly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

std::vector<ModFactor> factor_mod_ell(const IntPoly& f, const Integer& ell, std::uint64_t seed) {
    if (!is_prime(ell)) fail(ErrorKind::InvalidArgument, "factor_mod_ell: " + ell.get_str() + " is not prime");
    if (!f.is_monic()) fail(ErrorKind::InvalidArgument, "factor_mod_ell: polynomial " + f.to_string() + " is not monic");

    SplitRng rng(seed);
    std::vector<ModFactor> out;
    for (const auto& part : squarefree_decomposition(ModPoly(ell, f))) {
        for (const auto& [block, d] : distinct_degree_factorization(part.factor)) {
            std::vector<ModPoly> irreducibles;
            equal_degree_split(block, d, rng, irreducibles);
            for (auto& p : irreducibles) out.push_back({p.monic(), part.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ModFactor& a, const ModFactor& b) { return canonical_less(a.factor, b.factor); });
    return out;
}

}  // namespace gl2tors
