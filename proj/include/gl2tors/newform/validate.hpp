#pragma once

#include <string>
#include <vector>

#include "gl2tors/newform/record.hpp"

namespace gl2tors {

struct ValidationReport {
    std::string label;
    long required_bound = 0;
    std::vector<long> missing_primes;
    /// Primes p where Norm(1 - a_p + p) <= 0.
    std::vector<long> positivity_violations;
    bool field_poly_squarefree = true;
    bool field_poly_monic = true;

    bool passed() const {
        return missing_primes.empty() && positivity_violations.empty() && field_poly_squarefree && field_poly_monic;
    }
    std::string describe() const;
};

ValidationReport validate_record(const NewformRecord& r, long required_bound);

}  // namespace gl2tors
