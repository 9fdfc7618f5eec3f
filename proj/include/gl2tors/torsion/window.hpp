#pragma once

#include <set>
#include <vector>

namespace gl2tors {

/// The primes p used for gcd and valuation minima: primes p <= bound with
/// p not dividing the level, odd unless include_p2, minus `excluded`.
struct PrimeWindow {
    long bound = 0;
    long level = 1;
    bool include_p2 = false;
    std::set<long> excluded;

    bool admits(long p) const;
    std::vector<long> admitted() const;
    bool empty() const { return admitted().empty(); }

    PrimeWindow without(long p) const;
    PrimeWindow with_bound(long b) const;

    bool operator==(const PrimeWindow&) const = default;
};

PrimeWindow make_window(long level, long bound, bool include_p2 = false);

/// Smallest prime the window would admit at an unlimited bound.
long first_admissible_prime(const PrimeWindow& w);

}  // namespace gl2tors
