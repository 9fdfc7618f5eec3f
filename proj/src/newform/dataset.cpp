#include "gl2tors/newform/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "gl2tors/errors.hpp"

namespace gl2tors {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void corrupt(const std::string& msg) { fail(ErrorKind::CorruptData, msg); }

ojson integer_to_json(const Integer& n) {
    if (fits_int64(n)) return ojson(n.get_si());
    return ojson(n.get_str());
}

Integer json_to_integer(const ojson& v, const char* what) {
    if (v.is_number_integer() && !v.is_number_unsigned()) return Integer(std::to_string(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    if (v.is_string()) {
        static const std::regex digits("-?[0-9]+");
        const auto& s = v.get_ref<const std::string&>();
        if (std::regex_match(s, digits)) return Integer(s);
    }
    corrupt(std::string("non-integer value in ") + what);
}

const ojson& field(const ojson& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) corrupt(std::string("missing field \"") + key + "\"");
    return *it;
}

long json_to_long(const ojson& v, const char* what) {
    Integer n = json_to_integer(v, what);
    if (!fits_int64(n)) corrupt(std::string("value out of range in ") + what);
    return n.get_si();
}

}  // namespace

std::string serialize_record(const NewformRecord& r) {
    ojson j;
    j["label"] = r.label;
    j["level"] = r.level;
    j["weight"] = r.weight;
    j["char_trivial"] = r.char_trivial;
    j["dimension"] = r.dimension;
    ojson poly = ojson::array();
    for (const auto& c : r.field_poly.coefficients()) poly.push_back(integer_to_json(c));
    j["field_poly"] = std::move(poly);
    ojson eig = ojson::array();
    for (const auto& [p, coords] : r.eigenvalues) {
        ojson e;
        e["p"] = p;
        ojson num = ojson::array();
        for (const auto& c : coords.num) num.push_back(integer_to_json(c));
        e["num"] = std::move(num);
        e["den"] = integer_to_json(coords.den);
        eig.push_back(std::move(e));
    }
    j["eigenvalues"] = std::move(eig);
    j["data_bound"] = r.data_bound;
    return j.dump();
}

NewformRecord parse_record(const std::string& line) {
    ojson j;
    try {
        j = ojson::parse(line);
    } catch (const ojson::parse_error& e) {
        corrupt(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) corrupt("record is not a JSON object");

    NewformRecord r;
    const auto& label = field(j, "label");
    if (!label.is_string()) corrupt("label must be a string");
    r.label = label.get<std::string>();
    r.level = json_to_long(field(j, "level"), "level");
    if (r.level < 1) corrupt("level must be positive");
    r.weight = static_cast<int>(json_to_long(field(j, "weight"), "weight"));
    if (r.weight != 2) corrupt("unsupported weight " + std::to_string(r.weight));
    const auto& ct = field(j, "char_trivial");
    if (!ct.is_boolean()) corrupt("char_trivial must be a boolean");
    r.char_trivial = ct.get<bool>();
    if (!r.char_trivial) corrupt("unsupported non-trivial character");
    r.dimension = static_cast<int>(json_to_long(field(j, "dimension"), "dimension"));
    if (r.dimension < 1) corrupt("dimension must be positive");

    const auto& poly = field(j, "field_poly");
    if (!poly.is_array()) corrupt("field_poly must be an array");
    std::vector<Integer> pc;
    for (const auto& c : poly) pc.push_back(json_to_integer(c, "field_poly"));
    if (static_cast<int>(pc.size()) != r.dimension + 1)
        corrupt("field_poly has " + std::to_string(pc.size()) + " coefficients, expected " +
                std::to_string(r.dimension + 1));
    r.field_poly = IntPoly(std::move(pc));
    if (!r.field_poly.is_monic() || r.field_poly.degree() != r.dimension) corrupt("field_poly is not monic of degree dimension");

    const auto& eig = field(j, "eigenvalues");
    if (!eig.is_array()) corrupt("eigenvalues must be an array");
    for (const auto& e : eig) {
        if (!e.is_object()) corrupt("eigenvalue entry is not an object");
        long p = json_to_long(field(e, "p"), "eigenvalue prime");
        if (!is_prime(p)) corrupt("eigenvalue index " + std::to_string(p) + " is not prime");
        const auto& num = field(e, "num");
        if (!num.is_array()) corrupt("eigenvalue num must be an array");
        EigenCoords coords;
        for (const auto& c : num) coords.num.push_back(json_to_integer(c, "eigenvalue num"));
        if (static_cast<int>(coords.num.size()) != r.dimension)
            corrupt("coordinate length mismatch at p=" + std::to_string(p) + ": " + std::to_string(coords.num.size()) +
                    " != " + std::to_string(r.dimension));
        coords.den = json_to_integer(field(e, "den"), "eigenvalue den");
        if (coords.den <= 0) corrupt("non-positive denominator at p=" + std::to_string(p));
        if (!r.eigenvalues.emplace(p, std::move(coords)).second)
            corrupt("duplicate eigenvalue for p=" + std::to_string(p));
    }
    r.data_bound = json_to_long(field(j, "data_bound"), "data_bound");
    return r;
}

ParsedDataset parse_dataset(std::istream& in) {
    if (!in) fail(ErrorKind::Io, "dataset stream is not readable");
    ParsedDataset out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.records.push_back(parse_record(line));
        } catch (const Error& e) {
            std::string label;
            try {
                auto j = ojson::parse(line);
                if (j.is_object() && j.contains("label") && j["label"].is_string()) label = j["label"].get<std::string>();
            } catch (...) {
            }
            out.diagnostics.push_back({lineno, label, e.what()});
        }
    }
    if (in.bad()) fail(ErrorKind::Io, "error while reading dataset stream");
    if (out.records.empty())
        fail(ErrorKind::EmptyDataset,
             "dataset contains no valid records (" + std::to_string(out.diagnostics.size()) + " rejected lines)");
    std::stable_sort(out.records.begin(), out.records.end(), record_less);
    return out;
}

ParsedDataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open dataset " + path);
    return parse_dataset(in);
}

void write_dataset(const std::string& path, const std::vector<NewformRecord>& records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write dataset " + path);
    std::vector<const NewformRecord*> sorted;
    for (const auto& r : records) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return record_less(*a, *b); });
    for (const auto* r : sorted) out << serialize_record(*r) << '\n';
    if (!out) fail(ErrorKind::Io, "write failed for " + path);
}

DatasetManifest make_manifest(const std::vector<NewformRecord>& records, DatasetSource source) {
    DatasetManifest m;
    m.source = source;
    m.record_count = static_cast<long>(records.size());
    for (const auto& r : records) ++m.per_dimension[r.dimension];
    return m;
}

std::string DatasetManifest::summary() const {
    std::ostringstream os;
    os << "source: " << (source == DatasetSource::Local ? "local" : "lmfdb-cache") << '\n';
    os << "records: " << record_count << '\n';
    for (const auto& [dim, count] : per_dimension) os << "  dimension " << dim << ": " << count << '\n';
    os << "data bound policy: " << data_bound_policy << '\n';
    return os.str();
}

}  // namespace gl2tors
