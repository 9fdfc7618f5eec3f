// Acceptance checks. `acceptance N` runs criterion N, no argument runs all;
// each criterion prints exactly one PASS/FAIL line.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "../unit/oracles.hpp"
#include "gl2tors/arith/hensel.hpp"
#include "gl2tors/arith/integer.hpp"
#include "gl2tors/arith/resultant.hpp"
#include "gl2tors/cli/run.hpp"
#include "gl2tors/newform/dataset.hpp"
#include "gl2tors/numfield/prime_decomposition.hpp"
#include "gl2tors/torsion/survey.hpp"

using namespace gl2tors;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::set<Integer>& xs) { return xs.empty() ? "{}" : "{" + join_integers(xs) + "}"; }

std::string join(const std::set<long>& xs) {
    std::string s;
    for (long x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return "{" + s + "}";
}

std::set<Integer> ints(std::initializer_list<long> xs) {
    std::set<Integer> out;
    for (long x : xs) out.insert(Integer(x));
    return out;
}

const std::vector<NewformRecord>& bundled() {
    static const auto records = load_dataset(default_data_path()).records;
    return records;
}

const SurveyTables& survey_of(int g) {
    static std::map<int, SurveyTables> cache;
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, survey(bundled(), g, 500)).first;
    return it->second;
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome c1() {
    auto t0 = Clock::now();
    std::vector<const char*> argv{"gl2tors", "analyze", "--label", "39.2.a.b", "--format", "structured"};
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    double dt = seconds_since(t0);
    if (code != 0) return {false, "analyze exited " + std::to_string(code) + ": " + err.str()};
    auto a = parse_analysis(out.str());
    std::ostringstream d;
    d << "39.2.a.b T=" << a.T.get_str() << " (expected 28), G=" << a.G.get_str() << ", " << dt << " s (limit 5 s)";
    return {a.T == 28 && dt < 5.0, d.str()};
}

Outcome c2() {
    const auto expected = ints({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 24, 28, 44, 56});
    auto t0 = Clock::now();
    const auto& t = survey_of(2);
    double dt = seconds_since(t0);
    std::set<Integer> missing, extra;
    for (const auto& x : expected)
        if (!t.divisor_closure.count(x)) missing.insert(x);
    for (const auto& x : t.divisor_closure)
        if (!expected.count(x)) extra.insert(x);
    std::ostringstream d;
    d << "g=2 level<=500: " << t.analyses.size() << " records, closure " << join(t.divisor_closure) << "; missing "
      << join(missing) << ", discrepancies " << join(extra) << ", " << t.failures.size() << " failures, " << dt
      << " s";
    return {missing.empty() && t.failures.empty() && dt < 1800, d.str()};
}

Outcome c3() {
    const std::set<long> p2{2, 3, 5, 7, 11, 13, 19}, p3{2, 3, 5, 7, 11, 13, 17, 23, 29, 31};
    const auto& t2 = survey_of(2);
    const auto& t3 = survey_of(3);
    std::ostringstream d;
    d << "g=2 primes " << join(t2.primes) << ", g=3 primes " << join(t3.primes);
    return {t2.primes == p2 && t3.primes == p3, d.str()};
}

Outcome c4() {
    bool ok = true;
    std::ostringstream d;
    for (int g : {2, 3}) {
        if (g == 3) d << "; ";
        const auto& t = survey_of(g);
        bool same = t.orders == t.sharp_orders;
        ok = ok && same && t.failures.empty();
        d << "g=" << g << ": " << t.orders.size() << " predicted orders, " << t.sharp_orders.size()
          << " gcd-matching (" << t.sharp_count << "/" << t.analyses.size() << " records sharp, " << t.unknown_count
          << " unknown)" << (same ? "" : " MISMATCH");
    }
    return {ok, d.str()};
}

Outcome c5() {
    struct Curve {
        const char* label;
        long a1, a2, a3, a4, a6;
    };
    const Curve curves[] = {{"11.2.a.a", 0, -1, 1, -10, -20}, {"14.2.a.a", 1, 0, 1, 4, -6}, {"15.2.a.a", 1, 1, 1, -10, -10}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& c : curves) {
        const NewformRecord* rec = nullptr;
        for (const auto& r : bundled())
            if (r.label == c.label) rec = &r;
        if (!rec) return {false, std::string("missing record ") + c.label};
        // oracle first
        Integer og = 0;
        for (long p : primes_in_range(3, 100))
            if (rec->level % p != 0) og = gcd(og, Integer(oracle::count_points(c.a1, c.a2, c.a3, c.a4, c.a6, p)));
        auto a = predicted_torsion_order(*rec, BoundPolicy::fixed(100));
        bool good = a.G == og && a.T == a.G;
        ok = ok && good;
        d << (d.tellp() > 0 ? "; " : "") << c.label << " oracle " << og.get_str() << " G " << a.G.get_str() << " T " << a.T.get_str();
    }
    return {ok, d.str()};
}

// Random fields of degree <= 6, certified irreducible by irreducibility mod a small prime.
std::vector<NumberField> random_fields(std::mt19937_64& rng, int count) {
    std::vector<NumberField> out;
    while (static_cast<int>(out.size()) < count) {
        int deg = 1 + static_cast<int>(rng() % 6);
        IntPoly f = oracle::random_monic(rng, deg, 12);
        if (!is_squarefree(f)) continue;
        bool irreducible = false;
        for (long p : {2, 3, 5, 7, 11})
            if (oracle::brute_irreducible(ModPoly(Integer(p), f))) irreducible = true;
        if (irreducible) out.emplace_back(f);
    }
    return out;
}

// Random nonzero element with a tendency to be divisible by primes over ell.
FieldElement random_element(const NumberField& F, long ell, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-30, 30), small(0, 3), den(1, 12), shift(0, ell - 1);
    for (;;) {
        std::vector<Integer> c(static_cast<size_t>(F.degree()));
        for (auto& x : c) x = coef(rng);
        FieldElement a = F.element(IntPoly(std::move(c)), Integer(den(rng)) * power(Integer(ell), small(rng) % 2));
        long k = small(rng);
        FieldElement lin = F.generator() - F.from_integer(shift(rng));
        for (long i = 0; i < k; ++i) a = a * lin;
        a = a * F.from_integer(power(Integer(ell), small(rng)));
        if (!a.is_zero()) return a;
    }
}

struct PropertyStats {
    long identities = 0, identity_failures = 0;
    long pairs = 0, degree_failures = 0;
    long hensel = 0, hensel_failures = 0;
    long additivity = 0, additivity_failures = 0;
    long precision = 0, precision_failures = 0;
    double seconds = 0;
};

const PropertyStats& properties() {
    static PropertyStats s = [] {
        PropertyStats s;
        auto t0 = Clock::now();
        std::mt19937_64 rng(20260519);
        auto fields = random_fields(rng, 40);
        auto primes = primes_in_range(2, 100);
        for (const auto& F : fields) {
            for (long ell : primes) {
                auto d = decompose_prime(F, Integer(ell));
                if (!d.maximal_at_ell) continue;
                ++s.pairs;
                int sum = 0;
                std::vector<ModPoly> blocks;
                for (const auto& lam : d.primes) {
                    sum += lam.e * lam.f;
                    blocks.push_back(pow(lam.residue_factor, lam.e));
                }
                if (sum != F.degree()) ++s.degree_failures;

                ++s.hensel;
                auto lifted = hensel_lift_blocks(F.defining_poly(), blocks, 6);
                ModPoly prod = ModPoly::one(lifted.front().modulus());
                bool ok = true;
                for (size_t i = 0; i < lifted.size(); ++i) {
                    prod = prod * lifted[i];
                    ok = ok && lifted[i].is_monic() && ModPoly(Integer(ell), lifted[i].lift()) == blocks[i];
                }
                ok = ok && prod == ModPoly(prod.modulus(), F.defining_poly());
                if (!ok) ++s.hensel_failures;

                bool sampled = ell <= 13 || ell % 10 == 1 || ell % 10 == 7;
                for (int i = 0; i < (sampled ? 3 : 1); ++i) {
                    FieldElement a = random_element(F, ell, rng);
                    FieldElement b = random_element(F, ell, rng);
                    long lhs = int_valuation(abs(resultant(F.defining_poly(), a.numerator())), Integer(ell)) -
                               F.degree() * int_valuation(a.denominator(), Integer(ell));
                    long rhs = 0;
                    for (const auto& lam : d.primes) {
                        long va = lambda_valuation(F, lam, a);
                        rhs += lam.f * va;
                        ++s.additivity;
                        if (lambda_valuation(F, lam, a * b) != va + lambda_valuation(F, lam, b)) ++s.additivity_failures;
                    }
                    ++s.identities;
                    if (lhs != rhs) ++s.identity_failures;

                    if (i == 0) {
                        ++s.precision;
                        std::vector<std::pair<int, int>> shape;
                        std::vector<long> vals[3];
                        int k = 0;
                        for (int m0 : {4, 8, 16}) {
                            auto dm = decompose_prime(F, Integer(ell), m0);
                            std::vector<std::pair<int, int>> sh;
                            for (const auto& lam : dm.primes) {
                                sh.emplace_back(lam.e, lam.f);
                                vals[k].push_back(lambda_valuation(F, lam, a));
                            }
                            if (k == 0) shape = sh;
                            if (sh != shape) ++s.precision_failures;
                            ++k;
                        }
                        if (vals[0] != vals[1] || vals[1] != vals[2]) ++s.precision_failures;
                    }
                }
            }
        }
        s.seconds = seconds_since(t0);
        return s;
    }();
    return s;
}

Outcome c6() {
    const auto& s = properties();
    std::ostringstream d;
    d << s.identities << " norm-valuation identities over " << s.pairs << " (field, ell) pairs, "
      << s.identity_failures << " failures, " << s.seconds << " s (limit 60 s)";
    return {s.identities >= 1000 && s.identity_failures == 0 && s.seconds < 60, d.str()};
}

Outcome c7() {
    const auto& s = properties();
    std::ostringstream d;
    d << "degree sum " << s.pairs - s.degree_failures << "/" << s.pairs << ", Hensel " << s.hensel - s.hensel_failures
      << "/" << s.hensel << ", additivity " << s.additivity - s.additivity_failures << "/" << s.additivity
      << ", precision 4/8/16 " << s.precision - s.precision_failures << "/" << s.precision;
    bool ok = s.degree_failures == 0 && s.hensel_failures == 0 && s.additivity_failures == 0 &&
              s.precision_failures == 0 && s.pairs > 0;
    return {ok, d.str()};
}

Outcome c8() {
    long records = 0, checks = 0, violations = 0, failures = 0, not_dividing = 0;
    std::string first;
    std::set<int> dims;
    for (const auto& r : bundled()) dims.insert(r.dimension);
    for (int g : dims) {
        const auto& t = g == 2 || g == 3 ? survey_of(g) : survey(bundled(), g, 500);
        failures += static_cast<long>(t.failures.size());
        if (!t.failures.empty() && first.empty()) first = t.failures[0].label + ": " + t.failures[0].message;
        for (const auto& a : t.analyses) {
            ++records;
            if (a.G % a.T != 0) ++not_dividing;
            for (const auto& rep : a.reports) {
                ++checks;
                long vT = int_valuation(a.T, Integer(rep.ell)), vG = int_valuation(a.G, Integer(rep.ell));
                bool bad = vT > vG || (!rep.unresolved && rep.entries.size() == 1 && vT != vG);
                if (bad) {
                    ++violations;
                    if (first.empty()) first = a.label + " at ell=" + std::to_string(rep.ell);
                }
            }
        }
    }
    std::ostringstream d;
    d << records << " records, " << checks << " ell-checks: " << violations << " violations, " << not_dividing
      << " with T not dividing G, " << failures << " analysis failures" << (first.empty() ? "" : " (first: " + first + ")");
    return {violations == 0 && not_dividing == 0 && failures == 0, d.str()};
}

Outcome c9() {
    const auto& t = survey_of(2);
    std::vector<std::string> smaller;
    long unknown = 0;
    for (const auto& a : t.analyses) {
        if (!a.G_doubled) {
            ++unknown;
            continue;
        }
        if (*a.G_doubled != a.G)
            smaller.push_back(a.label + " (" + a.G.get_str() + " -> " + a.G_doubled->get_str() + ")");
    }
    std::ostringstream d;
    d << t.analyses.size() << " g=2 records, " << smaller.size() << " with smaller G at twice the Sturm bound";
    for (const auto& s : smaller) d << "; " << s;
    if (unknown) d << "; " << unknown << " without data at twice the bound";
    return {smaller.empty() && unknown == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::map<int, std::function<Outcome()>> criteria{{1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5},
                                                           {6, c6}, {7, c7}, {8, c8}, {9, c9}};
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (const auto& [k, _] : criteria) which.push_back(k);
    int failed = 0;
    for (int k : which) {
        auto it = criteria.find(k);
        if (it == criteria.end()) {
            std::cerr << "unknown criterion " << k << '\n';
            return 2;
        }
        Outcome o;
        try {
            o = it->second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
