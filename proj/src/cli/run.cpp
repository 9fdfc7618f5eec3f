#include "gl2tors/cli/run.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "gl2tors/newform/dataset.hpp"
#include "gl2tors/newform/sturm.hpp"
#include "gl2tors/newform/validate.hpp"

#ifndef GL2TORS_DEFAULT_DATA
#define GL2TORS_DEFAULT_DATA "data/newforms_w2_n500_d5.jsonl"
#endif

namespace gl2tors {

namespace fs = std::filesystem;

namespace {

ParsedDataset load_data(const std::string& path, std::ostream& err) {
    ParsedDataset all;
    std::vector<std::string> files;
    if (fs::is_directory(path)) {
        for (const auto& e : fs::directory_iterator(path))
            if (e.path().extension() == ".jsonl") files.push_back(e.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) fail(ErrorKind::EmptyDataset, "no .jsonl files in " + path);
    } else {
        files.push_back(path);
    }
    for (const auto& f : files) {
        auto d = load_dataset(f);
        for (auto& diag : d.diagnostics) {
            err << f << ":" << diag.line << ": " << (diag.label.empty() ? "" : diag.label + ": ") << diag.message
                << '\n';
            all.diagnostics.push_back(std::move(diag));
        }
        for (auto& r : d.records) all.records.push_back(std::move(r));
    }
    std::stable_sort(all.records.begin(), all.records.end(), record_less);
    return all;
}

const NewformRecord& find_record(const std::vector<NewformRecord>& records, const std::string& label) {
    for (const auto& r : records)
        if (r.label == label) return r;
    fail(ErrorKind::MissingData, "record not found: " + label);
}

EngineConfig engine(const RunConfig& c) {
    EngineConfig e;
    e.include_p2 = c.include_p2;
    e.exclude_ell = c.exclude_ell;
    e.seed = c.seed;
    return e;
}

int do_fetch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    LmfdbConfig lc;
    lc.base_url = c.base_url;
    lc.cache_dir = c.cache_dir;
    lc.offline = c.offline;
    LmfdbClient client(lc);
    FetchResult res = c.label ? client.fetch_label(*c.label) : client.fetch(c.levels, c.dims);
    for (const auto& d : res.diagnostics) err << "warning: " << d.label << ": " << d.message << '\n';
    err << "network requests: " << res.network_requests << ", cache hits: " << res.cache_hits << '\n';
    if (!c.out_path.empty()) write_dataset(c.out_path, res.records);
    out << make_manifest(res.records, DatasetSource::LmfdbCache).summary() << '\n';
    if (!res.diagnostics.empty()) out << "skipped: " << res.diagnostics.size() << '\n';
    return kExitOk;
}

int do_validate(const RunConfig& c, std::ostream& out, std::ostream& err) {
    auto data = load_data(c.data_path, err);
    std::vector<const NewformRecord*> todo;
    if (c.label) {
        todo.push_back(&find_record(data.records, *c.label));
    } else {
        for (const auto& r : data.records) todo.push_back(&r);
    }
    long failed = 0;
    for (const auto* r : todo) {
        long bound = c.required_bound ? *c.required_bound : required_data_bound(r->level);
        auto rep = validate_record(*r, bound);
        if (!rep.passed()) {
            ++failed;
            out << rep.describe() << '\n';
        }
    }
    out << "validated " << todo.size() << " records: " << (todo.size() - failed) << " passed, " << failed
        << " failed";
    if (!data.diagnostics.empty()) out << ", " << data.diagnostics.size() << " unparsable lines";
    out << '\n';
    return failed || !data.diagnostics.empty() ? kExitData : kExitOk;
}

int do_analyze(const RunConfig& c, std::ostream& out, std::ostream& err) {
    auto data = load_data(c.data_path, err);
    const auto& r = find_record(data.records, *c.label);
    auto a = predicted_torsion_order(r, c.bound, engine(c));
    for (const auto& rep : a.reports)
        if (rep.unresolved)
            err << "warning: " << a.label << ": ell=" << rep.ell << " unresolved; sharpness unknown\n";
    if (a.stabilization == Tristate::False)
        err << "warning: " << a.label << ": G changes from " << a.G.get_str() << " to " << a.G_doubled->get_str()
            << " at twice the bound\n";
    out << render(a, c.format);
    return kExitOk;
}

int do_survey(const RunConfig& c, std::ostream& out, std::ostream& err) {
    auto data = load_data(c.data_path, err);
    SurveyOptions opt;
    opt.policy = c.bound;
    opt.engine = engine(c);
    opt.jobs = c.jobs;
    if (c.progress)
        opt.progress = [&err](size_t done, size_t total) {
            if (done == total || done % 50 == 0) err << "\ranalyzed " << done << "/" << total << std::flush;
            if (done == total) err << '\n';
        };
    auto t = survey(data.records, *c.dimension, c.max_level, opt);
    bool internal = false;
    for (const auto& f : t.failures) {
        err << "error: " << f.label << ": " << f.message << '\n';
        internal = internal || exit_code_for(f.kind) == kExitInternal;
    }
    if (t.analyses.empty() && t.failures.empty())
        err << "warning: no records of dimension " << *c.dimension << " with level <= " << c.max_level << '\n';
    out << render(t, c.format);
    return internal ? kExitInternal : kExitOk;
}

LevelRange parse_range(const std::string& s, const char* what) {
    static const std::regex re(R"((\d+)(?:-(\d+))?)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        fail(ErrorKind::InvalidArgument, std::string("bad ") + what + " range '" + s + "' (expected N or LO-HI)");
    LevelRange r;
    r.lo = std::stol(m[1]);
    r.hi = m[2].matched ? std::stol(m[2]) : r.lo;
    if (r.lo < 1 || r.hi < r.lo) fail(ErrorKind::InvalidArgument, std::string("empty ") + what + " range '" + s + "'");
    return r;
}

BoundPolicy parse_bound(const std::string& s) {
    if (s == "auto") return BoundPolicy::sturm();
    static const std::regex digits(R"(\d+)");
    if (!std::regex_match(s, digits))
        fail(ErrorKind::InvalidArgument, "bad --prime-bound '" + s + "' (expected auto or an integer)");
    return BoundPolicy::fixed(std::stol(s));
}

}  // namespace

std::string default_data_path() { return GL2TORS_DEFAULT_DATA; }

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return kExitUsage;
        case ErrorKind::Fetch: return kExitFetch;
        case ErrorKind::InternalConsistency:
        case ErrorKind::LiftingFailure:
        case ErrorKind::InfiniteValuation: return kExitInternal;
        default: return kExitData;
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::Fetch: return do_fetch(config, out, err);
            case Command::Validate: return do_validate(config, out, err);
            case Command::Analyze:
                if (!config.label) fail(ErrorKind::InvalidArgument, "analyze requires --label");
                return do_analyze(config, out, err);
            case Command::Survey:
                if (!config.dimension) fail(ErrorKind::InvalidArgument, "survey requires --dim");
                return do_survey(config, out, err);
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Predicted rational torsion orders of modular abelian varieties of GL2-type"};
    app.require_subcommand(1);
    RunConfig c;
    c.data_path = default_data_path();
    c.cache_dir = default_cache_dir();
    std::string format = "text", bound = "auto", levels = "1-500", dims = "1-5";
    std::optional<std::string> label;
    std::optional<int> dim;
    std::optional<long> required;

    auto data_opt = [&](CLI::App* s) {
        s->add_option("--data", c.data_path, "dataset file (.jsonl) or directory")->envname("GL2TORS_DATA");
    };
    auto engine_opts = [&](CLI::App* s) {
        s->add_option("--prime-bound", bound, "auto (Sturm bound) or an integer");
        s->add_flag("--include-p2", c.include_p2, "admit p = 2 in the prime window");
        s->add_flag("--exclude-ell", c.exclude_ell, "drop p = ell from the window for the ell-part");
        s->add_option("--seed", c.seed, "seed for the randomized factoring");
        s->add_option("--format", format, "text, csv or structured")->check(CLI::IsMember({"text", "csv", "structured"}));
    };

    auto* fetch = app.add_subcommand("fetch", "download newforms from the LMFDB into the cache");
    fetch->add_option("--cache-dir", c.cache_dir, "response cache root")->envname("GL2TORS_CACHE");
    fetch->add_option("--base-url", c.base_url, "LMFDB base URL");
    fetch->add_flag("--offline", c.offline, "serve from the cache only");
    fetch->add_option("--levels", levels, "level range LO-HI");
    fetch->add_option("--dims", dims, "dimension range LO-HI");
    fetch->add_option("--label", label, "fetch a single newform");
    fetch->add_option("--out", c.out_path, "write the records as a dataset file");

    auto* validate = app.add_subcommand("validate", "check records for missing or inconsistent data");
    data_opt(validate);
    validate->add_option("--label", label, "validate a single record");
    validate->add_option("--required-bound", required, "primes needed (default max(2*Sturm, 100))");

    auto* analyze = app.add_subcommand("analyze", "predicted torsion order of one newform");
    data_opt(analyze);
    analyze->add_option("--label", label, "newform label, e.g. 39.2.a.b")->required();
    engine_opts(analyze);

    auto* surv = app.add_subcommand("survey", "torsion-order and prime lists for one dimension");
    data_opt(surv);
    surv->add_option("--dim", dim, "dimension g")->required();
    surv->add_option("--max-level", c.max_level, "largest level");
    surv->add_option("--jobs", c.jobs, "worker threads (0 = all cores)");
    surv->add_flag("--progress", c.progress, "report progress on stderr");
    engine_opts(surv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        if (fetch->parsed()) c.command = Command::Fetch;
        if (validate->parsed()) c.command = Command::Validate;
        if (analyze->parsed()) c.command = Command::Analyze;
        if (surv->parsed()) c.command = Command::Survey;
        c.label = label;
        c.dimension = dim;
        c.required_bound = required;
        c.format = format_from_string(format);
        c.bound = parse_bound(bound);
        c.levels = parse_range(levels, "level");
        c.dims = parse_range(dims, "dimension");
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(c, out, err);
}

}  // namespace gl2tors
