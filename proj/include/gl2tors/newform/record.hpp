#pragma once

#include <map>
#include <string>
#include <vector>

#include "gl2tors/numfield/number_field.hpp"

namespace gl2tors {

/// Power-basis coordinates of a Hecke eigenvalue: (sum num[i] x^i) / den.
struct EigenCoords {
    std::vector<Integer> num;
    Integer den = 1;

    bool operator==(const EigenCoords&) const = default;
};

/// A weight-2, trivial-character newform orbit with its coefficient field
/// and Hecke eigenvalues a_p for every prime p <= data_bound.
struct NewformRecord {
    std::string label;
    long level = 0;
    int weight = 2;
    bool char_trivial = true;
    int dimension = 0;
    IntPoly field_poly;
    std::map<long, EigenCoords> eigenvalues;
    long data_bound = 0;

    NumberField field() const { return NumberField(field_poly); }
    bool has_eigenvalue(long p) const { return eigenvalues.count(p) != 0; }
    /// a_p as a field element; MissingData when absent.
    FieldElement eigenvalue(const NumberField& field, long p) const;

    bool operator==(const NewformRecord& o) const;
};

/// Order used for every record listing: (level, label).
bool record_less(const NewformRecord& a, const NewformRecord& b);

}  // namespace gl2tors
