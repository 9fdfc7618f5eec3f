#include <doctest.h>

#include <random>

#include "gl2tors/arith/factor_mod.hpp"
#include "gl2tors/arith/hensel.hpp"
#include "gl2tors/arith/resultant.hpp"
#include "gl2tors/errors.hpp"
#include "oracles.hpp"

using namespace gl2tors;

namespace {

ModPoly mp(long modulus, std::initializer_list<long> c) { return ModPoly(Integer(modulus), IntPoly(c)); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Io;
}

ModPoly expand(const std::vector<ModFactor>& factors, const Integer& ell) {
    ModPoly out = ModPoly::one(ell);
    for (const auto& [p, e] : factors) out = out * pow(p, static_cast<unsigned>(e));
    return out;
}

}  // namespace

TEST_CASE("factor_mod_ell examples") {
    // x^2 - x - 1 = (x + 2)^2 mod 5
    auto f5 = factor_mod_ell(IntPoly{-1, -1, 1}, 5);
    REQUIRE(f5.size() == 1);
    CHECK(f5[0].factor == mp(5, {2, 1}));
    CHECK(f5[0].multiplicity == 2);

    auto f2 = factor_mod_ell(IntPoly{1, 0, 1}, 2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].factor == mp(2, {1, 1}));
    CHECK(f2[0].multiplicity == 2);

    // roots 4 and 8 mod 11: x - 4 = x + 7, x - 8 = x + 3; sorted lexicographically
    auto f11 = factor_mod_ell(IntPoly{-1, -1, 1}, 11);
    REQUIRE(f11.size() == 2);
    CHECK(f11[0].factor == mp(11, {3, 1}));
    CHECK(f11[1].factor == mp(11, {7, 1}));
    CHECK(f11[0].multiplicity == 1);
    CHECK(f11[1].multiplicity == 1);
}

TEST_CASE("factor_mod_ell errors") {
    CHECK(kind_of([] { factor_mod_ell(IntPoly{-1, -1, 1}, 9); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { factor_mod_ell(IntPoly{-1, -1, 2}, 5); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("factor_mod_ell handles inseparable parts in small characteristic") {
    // (x^2 + x + 1)^4 (x + 1)^2 over F_2, and x^9 - x^3 = x^3 (x - 1)^3 (x + 1)^3 over F_3
    ModPoly a = pow(mp(2, {1, 1, 1}), 4) * pow(mp(2, {1, 1}), 2);
    auto fa = factor_mod_ell(a.lift(), 2);
    REQUIRE(fa.size() == 2);
    CHECK(fa[0].factor == mp(2, {1, 1}));
    CHECK(fa[0].multiplicity == 2);
    CHECK(fa[1].factor == mp(2, {1, 1, 1}));
    CHECK(fa[1].multiplicity == 4);

    auto fb = factor_mod_ell(IntPoly{0, 0, 0, -1, 0, 0, 0, 0, 0, 1}, 3);
    REQUIRE(fb.size() == 3);
    for (const auto& [p, e] : fb) {
        CHECK(p.degree() == 1);
        CHECK(e == 3);
    }
}

TEST_CASE("factor_mod_ell round trip against brute-force irreducibility") {
    std::mt19937_64 rng(12345);
    const long primes[] = {2, 3, 5, 7, 11, 13, 31, 97};
    for (int trial = 0; trial < 300; ++trial) {
        long ell = primes[trial % 8];
        int deg = 1 + static_cast<int>(rng() % 8);
        IntPoly f = oracle::random_monic(rng, deg, 50);
        if (trial % 5 == 0) f = f * f;  // force repeated factors now and then
        auto factors = factor_mod_ell(f, ell, trial);
        CHECK(expand(factors, ell) == ModPoly(ell, f));
        for (size_t i = 0; i < factors.size(); ++i) {
            CHECK(factors[i].factor.is_monic());
            if (ell <= 13) CHECK(oracle::brute_irreducible(factors[i].factor));
            if (i > 0) CHECK(canonical_less(factors[i - 1].factor, factors[i].factor));
        }
    }
}

TEST_CASE("factor_mod_ell output does not depend on the seed") {
    IntPoly f{3, -7, 0, 2, 5, -1, 0, 1};
    for (long ell : {2, 3, 17, 101}) {
        auto ref = factor_mod_ell(f, ell, 0);
        for (std::uint64_t seed = 1; seed < 6; ++seed) {
            auto other = factor_mod_ell(f, ell, seed);
            REQUIRE(other.size() == ref.size());
            for (size_t i = 0; i < ref.size(); ++i) CHECK(other[i].factor == ref[i].factor);
        }
    }
}

TEST_CASE("hensel_lift_blocks examples") {
    auto l11 = hensel_lift_blocks(IntPoly{-1, -1, 1}, {mp(11, {-4, 1}), mp(11, {-8, 1})}, 2);
    REQUIRE(l11.size() == 2);
    CHECK(l11[0] == mp(121, {-37, 1}));
    CHECK(l11[1] == mp(121, {-85, 1}));  // 1 - 37 = -36 = 85 mod 121

    auto l5 = hensel_lift_blocks(IntPoly{1, 0, 1}, {mp(5, {-2, 1}), mp(5, {-3, 1})}, 2);
    CHECK(l5[0] == mp(25, {-7, 1}));
    CHECK(l5[1] == mp(25, {-18, 1}));

    IntPoly f{5, -3, 0, 1};
    auto single = hensel_lift_blocks(f, {ModPoly(7, f)}, 6);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == ModPoly(power(7, 6), f));
}

TEST_CASE("hensel_lift_blocks rejects non-coprime blocks") {
    // x^2 - x - 1 = (x + 2)(x + 2) mod 5
    CHECK(kind_of([] { hensel_lift_blocks(IntPoly{-1, -1, 1}, {mp(5, {2, 1}), mp(5, {2, 1})}, 3); }) ==
          ErrorKind::LiftingFailure);
}

TEST_CASE("hensel round trip on random factorizations") {
    std::mt19937_64 rng(777);
    const long primes[] = {2, 3, 5, 7, 13, 29};
    int lifted_cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        long ell = primes[trial % 6];
        IntPoly f = oracle::random_monic(rng, 2 + static_cast<int>(rng() % 7), 30);
        auto factors = factor_mod_ell(f, ell);
        std::vector<ModPoly> blocks;
        for (const auto& [p, e] : factors) blocks.push_back(pow(p, static_cast<unsigned>(e)));
        int m = 1 + static_cast<int>(rng() % 12);
        auto lifted = hensel_lift_blocks(f, blocks, m);
        Integer mod = power(ell, static_cast<unsigned long>(m));
        ModPoly prod = ModPoly::one(mod);
        for (size_t i = 0; i < lifted.size(); ++i) {
            CHECK(lifted[i].degree() == blocks[i].degree());
            CHECK(lifted[i].is_monic());
            CHECK(lifted[i].reduce(ell) == blocks[i]);
            prod = prod * lifted[i];
        }
        CHECK(prod == ModPoly(mod, f));
        ++lifted_cases;
    }
    CHECK(lifted_cases == 200);
}

TEST_CASE("resultant examples") {
    CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 1}) == 7);
    CHECK(resultant(IntPoly{-1, -1, 1}, IntPoly{-1, 2}) == -5);
    CHECK(resultant(IntPoly{4, 0, -3, 1}, IntPoly{1}) == 1);
    CHECK(kind_of([] { resultant(IntPoly{}, IntPoly{1, 1}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
        auto random_poly = [&](int deg) {
            std::vector<Integer> c(static_cast<size_t>(deg) + 1);
            for (auto& x : c) x = coef(rng);
            if (c.back() == 0) c.back() = 3;
            return IntPoly(std::move(c));
        };
        IntPoly f = random_poly(static_cast<int>(rng() % 7));
        IntPoly g = random_poly(static_cast<int>(rng() % 7));
        if (trial % 7 == 0) g = g * f;  // shared factor, resultant 0
        if (f.degree() + g.degree() == 0) continue;
        CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
    }
}

TEST_CASE("resultant is multiplicative in the second argument for monic f") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly f = oracle::random_monic(rng, 1 + static_cast<int>(rng() % 5), 9);
        IntPoly g = oracle::random_monic(rng, static_cast<int>(rng() % 5), 9) * Integer(1 + static_cast<long>(rng() % 3));
        IntPoly h = oracle::random_monic(rng, static_cast<int>(rng() % 5), 9);
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("resultant of ModPolys reduces integer resultant") {
    CHECK(resultant(mp(11, {-2, 0, 1}), mp(11, {-3, 1})) == 7);
    CHECK(resultant(mp(5, {-1, -1, 1}), mp(5, {-1, 2})) == 0);
}

TEST_CASE("int_valuation") {
    CHECK(int_valuation(56, 2) == 3);
    CHECK(int_valuation(56, 7) == 1);
    CHECK(int_valuation(1331, 11) == 3);
    CHECK(int_valuation(-1331, 11) == 3);
    CHECK(kind_of([] { int_valuation(0, 3); }) == ErrorKind::InfiniteValuation);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Integer a = static_cast<long>(rng() % 100000) + 1, b = static_cast<long>(rng() % 100000) + 1;
        for (long ell : {2, 3, 5, 7}) CHECK(int_valuation(a * b, ell) == int_valuation(a, ell) + int_valuation(b, ell));
    }
}

TEST_CASE("prime_divisors and divisors") {
    CHECK(prime_divisors(28) == std::vector<Integer>{2, 7});
    CHECK(prime_divisors(-97) == std::vector<Integer>{97});
    Integer big = Integer("1000000007") * Integer("998244353") * 8;
    CHECK(prime_divisors(big) == std::vector<Integer>{2, Integer("998244353"), Integer("1000000007")});
    CHECK(divisors(28) == std::vector<Integer>{1, 2, 4, 7, 14, 28});
    CHECK(divisors(1) == std::vector<Integer>{1});
}
