#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gl2tors/arith/integer.hpp"
#include "gl2tors/errors.hpp"
#include "gl2tors/newform/dataset.hpp"
#include "gl2tors/torsion/analysis.hpp"
#include "gl2tors/torsion/report.hpp"
#include "gl2tors/torsion/survey.hpp"
#include "oracles.hpp"

using namespace gl2tors;

namespace {

const std::string kSample = GL2TORS_TEST_DATA "/sample.jsonl";
const std::string kGolden = GL2TORS_TEST_DATA "/../golden";

const std::vector<NewformRecord>& sample() {
    static const auto records = load_dataset(kSample).records;
    return records;
}

const NewformRecord& rec(const std::string& label) {
    for (const auto& r : sample())
        if (r.label == label) return r;
    throw std::runtime_error("missing " + label);
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InternalConsistency;
}

// A degree-2 record over Q(sqrt 2) with hand-picked a_p.
NewformRecord toy(std::map<long, EigenCoords> eig) {
    NewformRecord r;
    r.label = "1.2.a.z";
    r.level = 1;
    r.dimension = 2;
    r.field_poly = IntPoly(std::vector<Integer>{-2, 0, 1});
    r.eigenvalues = std::move(eig);
    r.data_bound = r.eigenvalues.rbegin()->first;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("frobenius_data on 11.2.a.a matches point counts") {
    const auto& r = rec("11.2.a.a");
    auto d3 = frobenius_data(r, 3);
    CHECK(d3.P == r.field().from_integer(5));
    CHECK(d3.Np == 5);
    auto d7 = frobenius_data(r, 7);
    CHECK(d7.P == r.field().from_integer(10));
    CHECK(d7.Np == 10);
    // y^2 + y = x^3 - x^2 - 10x - 20
    for (long p : primes_in_range(3, 97))
        if (p != 11) CHECK(frobenius_data(r, p).Np == oracle::count_points(0, -1, 1, -10, -20, p));
}

TEST_CASE("frobenius_data with a_p = 0 is (p + 1)^g") {
    auto r = toy({{3, {{0, 0}, 1}}, {5, {{0, 0}, 1}}});
    CHECK(frobenius_data(r, 3).Np == 16);
    CHECK(frobenius_data(r, 5).Np == 36);
}

TEST_CASE("frobenius_data errors") {
    const auto& r = rec("11.2.a.a");
    CHECK(kind_of([&] { frobenius_data(r, 11); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { frobenius_data(r, 9); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { frobenius_data(r, 1009); }) == ErrorKind::MissingData);
    auto bad = toy({{3, {{4, 0}, 1}}});  // a_3 = 4 makes P_3 = 0
    CHECK(kind_of([&] { frobenius_data(bad, 3); }) == ErrorKind::CorruptData);
}

TEST_CASE("gcd_norms examples") {
    const auto& r11 = rec("11.2.a.a");
    auto w = make_window(11, 7);
    CHECK(w.admitted() == std::vector<long>{3, 5, 7});
    CHECK(gcd_norms(r11, w) == 5);
    CHECK(gcd_norms(rec("27.2.a.a"), make_window(27, 13)) == 3);
    // singleton window
    CHECK(gcd_norms(r11, make_window(11, 3)) == 5);
    CHECK(gcd_norms(rec("39.2.a.b"), make_window(39, 5)) == frobenius_data(rec("39.2.a.b"), 5).Np);
    CHECK(kind_of([&] { gcd_norms(r11, make_window(11, 2)); }) == ErrorKind::InvalidWindow);
}

TEST_CASE("prime window admits odd good primes") {
    auto w = make_window(39, 20);
    CHECK(w.admitted() == std::vector<long>{5, 7, 11, 17, 19});
    CHECK(make_window(39, 20, true).admitted().front() == 2);
    CHECK(w.without(7).admitted() == std::vector<long>{5, 11, 17, 19});
    CHECK(w.with_bound(5).admitted() == std::vector<long>{5});
    CHECK(first_admissible_prime(make_window(15, 1)) == 7);
}

TEST_CASE("ell_report for 11.2.a.a at ell = 5") {
    const auto& r = rec("11.2.a.a");
    for (const auto& w : {make_window(11, 7).without(5), make_window(11, 7)}) {
        auto rep = ell_report(r, 5, w);
        REQUIRE(rep.entries.size() == 1);
        CHECK(rep.entries[0] == LambdaEntry{1, 1, 1});
        CHECK(rep.predicted_exponent == 1);
        CHECK(rep.gcd_exponent == 1);
        CHECK(rep.sharp);
        CHECK(rep.inert);
        CHECK_FALSE(rep.unresolved);
    }
    auto other = ell_report(r, 3, make_window(11, 7));
    CHECK(other.predicted_exponent == 0);
    CHECK(other.gcd_exponent == 0);
}

TEST_CASE("predicted_torsion_order examples") {
    auto a39 = predicted_torsion_order(rec("39.2.a.b"));
    CHECK(a39.T == 28);
    CHECK(a39.G == 28);
    CHECK(a39.sharp == Tristate::True);
    REQUIRE(a39.reports.size() == 2);
    CHECK(a39.reports[0].ell == 2);
    CHECK(a39.reports[0].predicted_exponent == 2);
    CHECK(a39.reports[1].ell == 7);
    CHECK(a39.reports[1].predicted_exponent == 1);

    auto a11 = predicted_torsion_order(rec("11.2.a.a"));
    CHECK(a11.bound() == 3);  // Sturm bound 2 admits nothing
    CHECK(a11.T == 5);
    CHECK(a11.G == 5);

    auto a27 = predicted_torsion_order(rec("27.2.a.a"), BoundPolicy::fixed(13));
    CHECK(a27.T == 3);
    CHECK(a27.G == 3);
    CHECK(a27.stabilization == Tristate::True);
}

TEST_CASE("predicted_torsion_order reports missing primes") {
    auto r = rec("39.2.a.b");
    r.eigenvalues.erase(7);
    r.eigenvalues.erase(11);
    try {
        predicted_torsion_order(r, BoundPolicy::fixed(13));
        FAIL("expected MissingData");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MissingData);
        CHECK(std::string(e.what()).find("p=7,11") != std::string::npos);
    }
    // the doubled window may be short; stabilization is then unknown
    auto s = rec("39.2.a.b");
    auto a = predicted_torsion_order(s, BoundPolicy::fixed(s.data_bound));
    CHECK(a.stabilization == Tristate::Unknown);
    CHECK_FALSE(a.G_doubled);
}

TEST_CASE("excluding p = ell can break T | G (26.2.a.a)") {
    const auto& r = rec("26.2.a.a");
    auto with = predicted_torsion_order(r);
    CHECK(with.G % with.T == 0);
    EngineConfig c;
    c.exclude_ell = true;
    auto without = predicted_torsion_order(r, {}, c);
    CHECK(without.G == 3);
    CHECK(without.T == 9);
}

TEST_CASE("torsion inequalities, monotonicity and determinism on the sample") {
    for (const auto& r : sample()) {
        CAPTURE(r.label);
        auto a = predicted_torsion_order(r);
        CHECK(a.G % a.T == 0);
        for (const auto& rep : a.reports) {
            CHECK(rep.predicted_exponent <= rep.gcd_exponent);
            if (rep.inert || rep.entries.size() == 1) CHECK(rep.predicted_exponent == rep.gcd_exponent);
            CHECK(a.G % rep.ell == 0);
        }
        // enlarging the window never increases G or any n
        auto big = a.window.with_bound(2 * a.bound());
        Integer G2 = gcd_norms(r, big);
        CHECK(a.G % G2 == 0);
        for (const auto& rep : a.reports) {
            auto rep2 = ell_report(r, rep.ell, big);
            REQUIRE(rep2.entries.size() == rep.entries.size());
            for (size_t i = 0; i < rep.entries.size(); ++i) CHECK(rep2.entries[i].n <= rep.entries[i].n);
        }
        EngineConfig seeded;
        seeded.seed = 12345;
        auto b = predicted_torsion_order(r, {}, seeded);
        CHECK(a == b);
        CHECK(render(a, Format::Structured) == render(predicted_torsion_order(r), Format::Structured));
    }
}

TEST_CASE("survey aggregates and is independent of the worker count") {
    SurveyOptions one;
    one.jobs = 1;
    SurveyOptions many;
    many.jobs = 4;
    auto t1 = survey(sample(), 2, 500, one);
    auto t4 = survey(sample(), 2, 500, many);
    CHECK(render(t1, Format::Structured) == render(t4, Format::Structured));
    CHECK(t1.analyses.size() == 4);
    CHECK(t1.orders.count(28) == 1);
    for (size_t i = 1; i < t1.analyses.size(); ++i) CHECK(t1.analyses[i - 1].level <= t1.analyses[i].level);
    for (const auto& d : t1.divisor_closure)
        for (const auto& e : divisors(d)) CHECK(t1.divisor_closure.count(e) == 1);
    std::set<long> primes;
    for (const auto& d : t1.divisor_closure)
        if (d > 1)
            for (const auto& p : prime_divisors(d)) primes.insert(p.get_si());
    CHECK(primes == t1.primes);

    auto low = survey(sample(), 2, 30, one);
    CHECK(low.analyses.size() == 1);
}

TEST_CASE("survey collects per-record failures") {
    auto records = sample();
    for (auto& r : records)
        if (r.label == "23.2.a.a") r.eigenvalues.erase(3);
    auto t = survey(records, 2, 500);
    REQUIRE(t.failures.size() == 1);
    CHECK(t.failures[0].label == "23.2.a.a");
    CHECK(t.failures[0].kind == ErrorKind::MissingData);
    CHECK(t.analyses.size() == 3);
}

TEST_CASE("csv rendering") {
    SurveyTables empty;
    CHECK(render(empty, Format::Csv) == "label,level,dim,bound,G,T,sharp,stabilized\n");
    auto one = survey(sample(), 2, 30);
    CHECK(render(one, Format::Csv) == "label,level,dim,bound,G,T,sharp,stabilized\n23.2.a.a,23,2,4,11,11,true,true\n");
    auto a = predicted_torsion_order(rec("39.2.a.b"));
    CHECK(render(a, Format::Csv) == "label,level,dim,bound,G,T,sharp,stabilized\n39.2.a.b,39,2,9,28,28,true,true\n");
}

TEST_CASE("structured reports round-trip") {
    for (const auto& r : sample()) {
        auto a = predicted_torsion_order(r);
        CHECK(parse_analysis(render(a, Format::Structured)) == a);
    }
    auto t = survey(sample(), 2, 500);
    std::string s = render(t, Format::Structured);
    CHECK(render(parse_survey(s), Format::Structured) == s);
    CHECK(kind_of([] { parse_analysis("{\"label\":\"x\"}"); }) == ErrorKind::CorruptData);
    CHECK(kind_of([] { parse_analysis("not json"); }) == ErrorKind::CorruptData);
}

TEST_CASE("golden structured reports") {
    std::string a = read_file(kGolden + "/analyze_39.2.a.b.json");
    REQUIRE_FALSE(a.empty());
    CHECK(render(parse_analysis(a), Format::Structured) == a);
    CHECK(render(predicted_torsion_order(rec("39.2.a.b")), Format::Structured) == a);

    std::string s = read_file(kGolden + "/survey_sample_dim2.json");
    REQUIRE_FALSE(s.empty());
    CHECK(render(parse_survey(s), Format::Structured) == s);
    CHECK(render(survey(sample(), 2, 500), Format::Structured) == s);
}
