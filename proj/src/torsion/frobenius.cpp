#include "gl2tors/torsion/frobenius.hpp"

#include "gl2tors/arith/integer.hpp"
#include "gl2tors/errors.hpp"

namespace gl2tors {

FrobeniusData frobenius_data(const NewformRecord& r, const NumberField& field, long p) {
    if (p < 2 || !is_prime(Integer(p)))
        fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    if (r.level % p == 0)
        fail(ErrorKind::InvalidArgument, r.label + ": p=" + std::to_string(p) + " divides the level");
    FieldElement a = r.eigenvalue(field, p);
    FieldElement P = field.from_integer(1 + p) - a;
    Rational norm = field.norm(P);
    if (norm.get_den() != 1)
        fail(ErrorKind::CorruptData, r.label + ": Norm(1 - a_p + p) at p=" + std::to_string(p) +
                                         " is not an integer (" + norm.get_str() + ")");
    Integer n = abs(norm.get_num());
    if (n == 0)
        fail(ErrorKind::CorruptData, r.label + ": Norm(1 - a_p + p) vanishes at p=" + std::to_string(p));
    return {p, std::move(P), std::move(n)};
}

FrobeniusData frobenius_data(const NewformRecord& r, long p) { return frobenius_data(r, r.field(), p); }

}  // namespace gl2tors
