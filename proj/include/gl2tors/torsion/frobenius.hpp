#pragma once

#include "gl2tors/newform/record.hpp"
#include "gl2tors/numfield/number_field.hpp"

namespace gl2tors {

/// P_p = 1 - a_p + p (the Frobenius polynomial 1 - a_p t + p t^2 at t = 1)
/// and Np = |Norm(P_p)|.
struct FrobeniusData {
    long p;
    FieldElement P;
    Integer Np;
};

/// MissingData when a_p is absent, CorruptData when Np is not a positive
/// integer, InvalidArgument when p is not a prime of good reduction.
FrobeniusData frobenius_data(const NewformRecord& r, const NumberField& field, long p);
FrobeniusData frobenius_data(const NewformRecord& r, long p);

}  // namespace gl2tors
