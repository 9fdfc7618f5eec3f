#include "gl2tors/newform/record.hpp"

#include "gl2tors/errors.hpp"

namespace gl2tors {

FieldElement NewformRecord::eigenvalue(const NumberField& field, long p) const {
    auto it = eigenvalues.find(p);
    if (it == eigenvalues.end())
        fail(ErrorKind::MissingData, label + ": no eigenvalue a_" + std::to_string(p));
    return field.element(IntPoly(it->second.num), it->second.den);
}

bool NewformRecord::operator==(const NewformRecord& o) const {
    return label == o.label && level == o.level && weight == o.weight && char_trivial == o.char_trivial &&
           dimension == o.dimension && field_poly == o.field_poly && eigenvalues == o.eigenvalues &&
           data_bound == o.data_bound;
}

bool record_less(const NewformRecord& a, const NewformRecord& b) {
    if (a.level != b.level) return a.level < b.level;
    // LMFDB suffixes: shorter first ("z" < "ba"), then lexicographic.
    auto suffix = [](const std::string& s) {
        auto pos = s.rfind('.');
        return pos == std::string::npos ? s : s.substr(pos + 1);
    };
    std::string sa = suffix(a.label), sb = suffix(b.label);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a.label < b.label;
}

}  // namespace gl2tors
