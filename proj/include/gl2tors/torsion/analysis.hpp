#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2tors/newform/record.hpp"
#include "gl2tors/numfield/prime_decomposition.hpp"
#include "gl2tors/torsion/frobenius.hpp"
#include "gl2tors/torsion/window.hpp"

namespace gl2tors {

struct EngineConfig {
    bool include_p2 = false;
    /// Drop p = ell from the window when computing the ell-part (and compare
    /// against v_ell of the gcd over that smaller window).
    bool exclude_ell = false;
    int initial_precision = kInitialPrecision;
    std::uint64_t seed = 0;
};

/// gcd of Np over the admitted primes; InvalidWindow when none is admitted.
Integer gcd_norms(const NewformRecord& r, const PrimeWindow& window);

struct LambdaEntry {
    int e = 1;
    int f = 1;
    long n = 0;

    bool operator==(const LambdaEntry&) const = default;
};

struct EllReport {
    long ell = 0;
    std::vector<LambdaEntry> entries;
    long predicted_exponent = 0;
    long gcd_exponent = 0;
    bool sharp = false;
    bool inert = false;
    bool unresolved = false;

    bool operator==(const EllReport&) const = default;
};

/// The ell-part over exactly the primes admitted by `window`. Checks the
/// norm identity v_ell(Np) = sum f v_lambda(P_p) for every p, and
/// predicted = gcd exponent when a single lambda lies over ell; violations
/// raise InternalConsistency.
EllReport ell_report(const NewformRecord& r, long ell, const PrimeWindow& window, const EngineConfig& config = {});

enum class Tristate { False, True, Unknown };
std::string to_string(Tristate t);
Tristate tristate_from_string(const std::string& s);

struct BoundPolicy {
    /// Automatic: the Sturm bound of the level.
    bool automatic = true;
    long bound = 0;

    static BoundPolicy sturm() { return {}; }
    static BoundPolicy fixed(long b) { return {false, b}; }
};

struct TorsionAnalysis {
    std::string label;
    long level = 0;
    int dimension = 0;
    PrimeWindow window;
    Integer G;
    Integer T;
    /// Unknown when some ell | G is unresolved.
    Tristate sharp = Tristate::Unknown;
    std::vector<EllReport> reports;
    /// G at twice the bound; unknown when the record lacks the data.
    std::optional<Integer> G_doubled;
    Tristate stabilization = Tristate::Unknown;

    long bound() const { return window.bound; }
    bool operator==(const TorsionAnalysis&) const = default;
};

/// The bound the policy picks for a level. The Sturm bound is raised to the
/// first admissible prime when it admits none (e.g. level 11, bound 2).
long effective_bound(long level, BoundPolicy policy, bool include_p2 = false);

/// MissingData (listing the primes) when the record lacks a_p for some
/// admitted p <= bound.
TorsionAnalysis predicted_torsion_order(const NewformRecord& r, BoundPolicy policy = {},
                                        const EngineConfig& config = {});

}  // namespace gl2tors
