#include "gl2tors/torsion/report.hpp"

#include <iomanip>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "gl2tors/arith/integer.hpp"
#include "gl2tors/errors.hpp"

namespace gl2tors {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void corrupt(const std::string& msg) { fail(ErrorKind::CorruptData, "structured report: " + msg); }

ojson int_json(const Integer& n) {
    if (fits_int64(n)) return ojson(n.get_si());
    return ojson(n.get_str());
}

Integer json_int(const ojson& v, const char* what) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
        static const std::regex digits("-?[0-9]+");
        if (std::regex_match(v.get_ref<const std::string&>(), digits)) return Integer(v.get<std::string>());
    }
    corrupt(std::string("non-integer ") + what);
}

long json_long(const ojson& v, const char* what) {
    Integer n = json_int(v, what);
    if (!fits_int64(n)) corrupt(std::string("out of range ") + what);
    return n.get_si();
}

const ojson& at(const ojson& o, const char* key) {
    if (!o.is_object()) corrupt(std::string("expected an object around \"") + key + "\"");
    auto it = o.find(key);
    if (it == o.end()) corrupt(std::string("missing field \"") + key + "\"");
    return *it;
}

bool json_bool(const ojson& v, const char* what) {
    if (!v.is_boolean()) corrupt(std::string("expected boolean ") + what);
    return v.get<bool>();
}

Tristate json_tristate(const ojson& v, const char* what) {
    if (v.is_boolean()) return v.get<bool>() ? Tristate::True : Tristate::False;
    if (v.is_string() && v.get<std::string>() == "unknown") return Tristate::Unknown;
    corrupt(std::string("expected true|false|\"unknown\" for ") + what);
}

ojson tristate_json(Tristate t) {
    if (t == Tristate::Unknown) return "unknown";
    return t == Tristate::True;
}

ojson analysis_json(const TorsionAnalysis& a) {
    ojson j;
    j["label"] = a.label;
    j["level"] = a.level;
    j["dimension"] = a.dimension;
    j["bound"] = a.window.bound;
    j["include_p2"] = a.window.include_p2;
    j["G"] = int_json(a.G);
    j["T"] = int_json(a.T);
    j["sharp"] = tristate_json(a.sharp);
    j["stabilization"] = tristate_json(a.stabilization);
    j["G_doubled"] = a.G_doubled ? int_json(*a.G_doubled) : ojson(nullptr);
    ojson ells = ojson::array();
    for (const auto& r : a.reports) {
        ojson e;
        e["ell"] = r.ell;
        e["unresolved"] = r.unresolved;
        ojson entries = ojson::array();
        for (const auto& x : r.entries) entries.push_back({{"e", x.e}, {"f", x.f}, {"n", x.n}});
        e["entries"] = std::move(entries);
        e["predicted_exponent"] = r.predicted_exponent;
        e["gcd_exponent"] = r.gcd_exponent;
        ells.push_back(std::move(e));
    }
    j["ells"] = std::move(ells);
    return j;
}

TorsionAnalysis analysis_from_json(const ojson& j) {
    TorsionAnalysis a;
    a.label = at(j, "label").get<std::string>();
    a.level = json_long(at(j, "level"), "level");
    a.dimension = static_cast<int>(json_long(at(j, "dimension"), "dimension"));
    bool p2 = j.contains("include_p2") && json_bool(j.at("include_p2"), "include_p2");
    a.window = make_window(a.level, json_long(at(j, "bound"), "bound"), p2);
    a.G = json_int(at(j, "G"), "G");
    a.T = json_int(at(j, "T"), "T");
    a.sharp = json_tristate(at(j, "sharp"), "sharp");
    a.stabilization = json_tristate(at(j, "stabilization"), "stabilization");
    if (j.contains("G_doubled") && !j.at("G_doubled").is_null()) a.G_doubled = json_int(j.at("G_doubled"), "G_doubled");
    const ojson& ells = at(j, "ells");
    if (!ells.is_array()) corrupt("\"ells\" is not an array");
    for (const auto& e : ells) {
        EllReport r;
        r.ell = json_long(at(e, "ell"), "ell");
        r.unresolved = json_bool(at(e, "unresolved"), "unresolved");
        for (const auto& x : at(e, "entries"))
            r.entries.push_back({static_cast<int>(json_long(at(x, "e"), "e")),
                                 static_cast<int>(json_long(at(x, "f"), "f")), json_long(at(x, "n"), "n")});
        r.predicted_exponent = json_long(at(e, "predicted_exponent"), "predicted_exponent");
        r.gcd_exponent = json_long(at(e, "gcd_exponent"), "gcd_exponent");
        // derived flags
        r.sharp = !r.unresolved && r.predicted_exponent == r.gcd_exponent;
        r.inert = r.entries.size() == 1 && r.entries[0].e == 1 && r.entries[0].f == a.dimension;
        a.reports.push_back(std::move(r));
    }
    return a;
}

ojson parse_json(const std::string& s) {
    try {
        return ojson::parse(s);
    } catch (const ojson::exception& e) {
        corrupt(std::string("malformed JSON: ") + e.what());
    }
}

std::string csv_row(const TorsionAnalysis& a) {
    std::ostringstream os;
    os << a.label << ',' << a.level << ',' << a.dimension << ',' << a.window.bound << ',' << a.G.get_str() << ','
       << a.T.get_str() << ',' << to_string(a.sharp) << ',' << to_string(a.stabilization) << '\n';
    return os.str();
}

// Pads every column to its widest cell.
std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

std::vector<std::string> row_cells(const TorsionAnalysis& a) {
    return {a.label, std::to_string(a.level), std::to_string(a.dimension), std::to_string(a.window.bound),
            a.G.get_str(), a.T.get_str(), to_string(a.sharp), to_string(a.stabilization)};
}

std::string entries_text(const EllReport& r) {
    if (r.unresolved) return "unresolved";
    std::string s;
    for (const auto& x : r.entries)
        s += (s.empty() ? "" : " ") + ("(" + std::to_string(x.e) + "," + std::to_string(x.f) + "," +
                                       std::to_string(x.n) + ")");
    return s;
}

}  // namespace

Format format_from_string(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "structured") return Format::Structured;
    fail(ErrorKind::InvalidArgument, "unknown format '" + s + "' (text, csv, structured)");
}

std::string join_integers(const std::set<Integer>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + x.get_str();
    return s;
}

std::string render(const TorsionAnalysis& a, Format format) {
    switch (format) {
        case Format::Csv: return std::string(kCsvHeader) + "\n" + csv_row(a);
        case Format::Structured: return analysis_json(a).dump() + "\n";
        case Format::Text: break;
    }
    std::string g2 = a.G_doubled ? a.G_doubled->get_str() : "n/a";
    std::string out = table({{"label", a.label},
                             {"level", std::to_string(a.level)},
                             {"dimension", std::to_string(a.dimension)},
                             {"bound", std::to_string(a.window.bound)},
                             {"G", a.G.get_str()},
                             {"T", a.T.get_str()},
                             {"sharp", to_string(a.sharp)},
                             {"stabilized", to_string(a.stabilization) + " (G at bound " +
                                                std::to_string(2 * a.window.bound) + ": " + g2 + ")"}});
    if (!a.reports.empty()) {
        std::vector<std::vector<std::string>> rows{{"ell", "predicted", "gcd", "sharp", "primes (e,f,n)"}};
        for (const auto& r : a.reports)
            rows.push_back({std::to_string(r.ell), std::to_string(r.predicted_exponent),
                            std::to_string(r.gcd_exponent), r.unresolved ? "unknown" : (r.sharp ? "true" : "false"),
                            entries_text(r)});
        out += "\n" + table(rows);
    }
    for (const auto& r : a.reports)
        if (r.unresolved)
            out += "warning: ell=" + std::to_string(r.ell) +
                   " unresolved (Z[x] not maximal there); it contributes nothing to T\n";
    return out;
}

std::string render(const SurveyTables& t, Format format) {
    if (format == Format::Csv) {
        std::string out = std::string(kCsvHeader) + "\n";
        for (const auto& a : t.analyses) out += csv_row(a);
        return out;
    }
    if (format == Format::Structured) {
        ojson j;
        j["dimension"] = t.dimension;
        j["max_level"] = t.max_level;
        ojson recs = ojson::array();
        for (const auto& a : t.analyses) recs.push_back(analysis_json(a));
        j["records"] = std::move(recs);
        auto list = [](const auto& xs) {
            ojson arr = ojson::array();
            for (const auto& x : xs) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Integer>)
                    arr.push_back(int_json(x));
                else
                    arr.push_back(x);
            }
            return arr;
        };
        j["predicted_orders"] = list(t.predicted_orders);
        j["orders"] = list(t.orders);
        j["sharp_orders"] = list(t.sharp_orders);
        j["primes"] = list(t.primes);
        j["divisor_closure"] = list(t.divisor_closure);
        j["sharp_count"] = t.sharp_count;
        j["unknown_count"] = t.unknown_count;
        j["unstable"] = list(t.unstable);
        ojson fails = ojson::array();
        for (const auto& f : t.failures)
            fails.push_back({{"label", f.label}, {"level", f.level}, {"kind", std::string(to_string(f.kind))}, {"message", f.message}});
        j["failures"] = std::move(fails);
        return j.dump() + "\n";
    }
    std::vector<std::vector<std::string>> rows{{"label", "level", "dim", "bound", "G", "T", "sharp", "stabilized"}};
    for (const auto& a : t.analyses) rows.push_back(row_cells(a));
    std::ostringstream os;
    os << table(rows) << '\n';
    std::string primes;
    for (long p : t.primes) primes += (primes.empty() ? "" : " ") + std::to_string(p);
    os << "dimension " << t.dimension << ", level <= " << t.max_level << ": " << t.analyses.size() << " records\n";
    os << "orders: " << join_integers(t.orders) << '\n';
    os << "sharp orders: " << join_integers(t.sharp_orders) << '\n';
    os << "primes: " << primes << '\n';
    os << "divisor closure: " << join_integers(t.divisor_closure) << '\n';
    os << "sharp: " << t.sharp_count << " of " << t.analyses.size() << " (unknown " << t.unknown_count << ")\n";
    os << "unstable at twice the bound: " << t.unstable.size();
    for (const auto& l : t.unstable) os << ' ' << l;
    os << '\n';
    if (!t.failures.empty()) {
        os << "failures: " << t.failures.size() << '\n';
        for (const auto& f : t.failures) os << "  " << f.label << ": " << f.message << '\n';
    }
    return os.str();
}

TorsionAnalysis parse_analysis(const std::string& structured) { return analysis_from_json(parse_json(structured)); }

SurveyTables parse_survey(const std::string& structured) {
    ojson j = parse_json(structured);
    SurveyTables t;
    t.dimension = static_cast<int>(json_long(at(j, "dimension"), "dimension"));
    t.max_level = json_long(at(j, "max_level"), "max_level");
    for (const auto& r : at(j, "records")) t.analyses.push_back(analysis_from_json(r));
    for (const auto& f : at(j, "failures")) {
        SurveyFailure sf;
        sf.label = at(f, "label").get<std::string>();
        sf.level = json_long(at(f, "level"), "level");
        sf.kind = error_kind_from_string(at(f, "kind").get<std::string>());
        sf.message = at(f, "message").get<std::string>();
        t.failures.push_back(std::move(sf));
    }
    aggregate(t);
    return t;
}

}  // namespace gl2tors
