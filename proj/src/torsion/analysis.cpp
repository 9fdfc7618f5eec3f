#include "gl2tors/torsion/analysis.hpp"

#include <algorithm>
#include <limits>

#include "gl2tors/arith/integer.hpp"
#include "gl2tors/errors.hpp"
#include "gl2tors/newform/sturm.hpp"

namespace gl2tors {

namespace {

std::vector<FrobeniusData> window_data(const NewformRecord& r, const NumberField& field, const PrimeWindow& window) {
    auto ps = window.admitted();
    if (ps.empty())
        fail(ErrorKind::InvalidWindow, r.label + ": no admissible prime up to " + std::to_string(window.bound));
    std::vector<FrobeniusData> out;
    out.reserve(ps.size());
    for (long p : ps) out.push_back(frobenius_data(r, field, p));
    return out;
}

Integer gcd_of(const std::vector<FrobeniusData>& data) {
    Integer g = 0;
    for (const auto& d : data) g = gcd(g, d.Np);
    return g;
}

EllReport ell_part(const NewformRecord& r, const NumberField& field, long ell, const std::vector<FrobeniusData>& data,
                   const EngineConfig& config) {
    EllReport rep;
    rep.ell = ell;
    const Integer L(ell);
    long gexp = std::numeric_limits<long>::max();
    for (const auto& d : data) gexp = std::min(gexp, int_valuation(d.Np, L));
    rep.gcd_exponent = gexp;

    auto dec = decompose_prime(field, L, config.initial_precision, config.seed);
    if (dec.primes.empty()) {
        rep.unresolved = true;
        return rep;
    }
    const int g = field.degree();
    rep.inert = dec.inert(g);
    std::vector<LocalPrime> lambdas = dec.primes;
    std::vector<long> n(lambdas.size(), std::numeric_limits<long>::max());
    for (const auto& d : data) {
        long sum = 0;
        for (size_t i = 0; i < lambdas.size(); ++i) {
            auto v = valuation_at(field, lambdas[i], d.P);
            lambdas[i] = std::move(v.prime);  // keep any precision increase
            n[i] = std::min(n[i], v.value);
            sum += static_cast<long>(lambdas[i].f) * v.value;
        }
        long expect = int_valuation(d.Np, L);
        if (sum != expect)
            fail(ErrorKind::InternalConsistency, r.label + ": norm identity fails at p=" + std::to_string(d.p) +
                                                     ", ell=" + std::to_string(ell) + " (v_ell(Np)=" +
                                                     std::to_string(expect) + ", sum f*v=" + std::to_string(sum) + ")");
    }
    for (size_t i = 0; i < lambdas.size(); ++i) {
        rep.entries.push_back({lambdas[i].e, lambdas[i].f, n[i]});
        rep.predicted_exponent = std::max(rep.predicted_exponent, static_cast<long>(lambdas[i].f) * n[i]);
    }
    if (rep.predicted_exponent > rep.gcd_exponent)
        fail(ErrorKind::InternalConsistency, r.label + ": predicted exponent exceeds gcd exponent at ell=" +
                                                 std::to_string(ell));
    if (lambdas.size() == 1 && rep.predicted_exponent != rep.gcd_exponent)
        fail(ErrorKind::InternalConsistency, r.label + ": single prime over ell=" + std::to_string(ell) +
                                                 " but predicted exponent " + std::to_string(rep.predicted_exponent) +
                                                 " != gcd exponent " + std::to_string(rep.gcd_exponent));
    rep.sharp = rep.predicted_exponent == rep.gcd_exponent;
    return rep;
}

std::vector<long> missing_primes(const NewformRecord& r, const PrimeWindow& w) {
    std::vector<long> out;
    for (long p : w.admitted())
        if (!r.has_eigenvalue(p)) out.push_back(p);
    return out;
}

std::string join(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

}  // namespace

std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::True: return "true";
        case Tristate::False: return "false";
        case Tristate::Unknown: break;
    }
    return "unknown";
}

Tristate tristate_from_string(const std::string& s) {
    if (s == "true") return Tristate::True;
    if (s == "false") return Tristate::False;
    if (s == "unknown") return Tristate::Unknown;
    fail(ErrorKind::CorruptData, "expected true|false|unknown, got '" + s + "'");
}

Integer gcd_norms(const NewformRecord& r, const PrimeWindow& window) {
    return gcd_of(window_data(r, r.field(), window));
}

EllReport ell_report(const NewformRecord& r, long ell, const PrimeWindow& window, const EngineConfig& config) {
    if (ell < 2 || !is_prime(Integer(ell))) fail(ErrorKind::InvalidArgument, std::to_string(ell) + " is not prime");
    NumberField field = r.field();
    return ell_part(r, field, ell, window_data(r, field, window), config);
}

long effective_bound(long level, BoundPolicy policy, bool include_p2) {
    if (!policy.automatic) return policy.bound;
    long b = sturm_bound(level, 2).value;
    PrimeWindow w = make_window(level, b, include_p2);
    if (w.empty()) b = first_admissible_prime(w);
    return b;
}

TorsionAnalysis predicted_torsion_order(const NewformRecord& r, BoundPolicy policy, const EngineConfig& config) {
    TorsionAnalysis a;
    a.label = r.label;
    a.level = r.level;
    a.dimension = r.dimension;
    a.window = make_window(r.level, effective_bound(r.level, policy, config.include_p2), config.include_p2);

    if (auto miss = missing_primes(r, a.window); !miss.empty())
        fail(ErrorKind::MissingData, r.label + ": missing a_p for p=" + join(miss) + " (bound " +
                                         std::to_string(a.window.bound) + ")");
    NumberField field = r.field();
    auto data = window_data(r, field, a.window);
    a.G = gcd_of(data);

    a.T = 1;
    bool unresolved = false;
    if (a.G > 1) {
        for (const Integer& L : prime_divisors(a.G)) {
            long ell = L.get_si();
            EllReport rep;
            if (config.exclude_ell && a.window.admits(ell)) {
                std::vector<FrobeniusData> sub;
                for (const auto& d : data)
                    if (d.p != ell) sub.push_back(d);
                if (sub.empty())
                    fail(ErrorKind::InvalidWindow, r.label + ": window is empty once ell=" + std::to_string(ell) +
                                                       " is removed");
                rep = ell_part(r, field, ell, sub, config);
            } else {
                rep = ell_part(r, field, ell, data, config);
            }
            unresolved = unresolved || rep.unresolved;
            a.T *= power(L, static_cast<unsigned long>(rep.predicted_exponent));
            a.reports.push_back(std::move(rep));
        }
    }
    a.sharp = unresolved ? Tristate::Unknown : (a.T == a.G ? Tristate::True : Tristate::False);

    PrimeWindow doubled = a.window.with_bound(2 * a.window.bound);
    if (missing_primes(r, doubled).empty()) {
        a.G_doubled = gcd_of(window_data(r, field, doubled));
        a.stabilization = *a.G_doubled == a.G ? Tristate::True : Tristate::False;
    }
    return a;
}

}  // namespace gl2tors
