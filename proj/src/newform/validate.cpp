#include "gl2tors/newform/validate.hpp"

#include <sstream>

#include "gl2tors/arith/resultant.hpp"

namespace gl2tors {

ValidationReport validate_record(const NewformRecord& r, long required_bound) {
    ValidationReport rep;
    rep.label = r.label;
    rep.required_bound = required_bound;
    for (long p : primes_in_range(2, required_bound))
        if (!r.has_eigenvalue(p)) rep.missing_primes.push_back(p);

    rep.field_poly_monic = r.field_poly.is_monic() && r.field_poly.degree() >= 1;
    rep.field_poly_squarefree = rep.field_poly_monic && is_squarefree(r.field_poly);
    if (!rep.field_poly_squarefree) return rep;

    NumberField K(r.field_poly);
    for (const auto& [p, coords] : r.eigenvalues) {
        (void)coords;
        FieldElement P = K.from_integer(1 + p) - r.eigenvalue(K, p);
        if (K.norm(P) <= 0) rep.positivity_violations.push_back(p);
    }
    return rep;
}

std::string ValidationReport::describe() const {
    std::ostringstream os;
    os << label << ": " << (passed() ? "pass" : "FAIL");
    if (!field_poly_monic) os << "; field polynomial not monic";
    else if (!field_poly_squarefree) os << "; field polynomial not squarefree";
    if (!missing_primes.empty()) {
        os << "; missing primes";
        for (size_t i = 0; i < missing_primes.size(); ++i) os << (i ? "," : " ") << missing_primes[i];
    }
    if (!positivity_violations.empty()) {
        os << "; Norm(1 - a_p + p) <= 0 at p =";
        for (size_t i = 0; i < positivity_violations.size(); ++i) os << (i ? "," : " ") << positivity_violations[i];
    }
    return os.str();
}

}  // namespace gl2tors
