#include "gl2tors/newform/lmfdb.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "gl2tors/errors.hpp"

namespace gl2tors {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

[[noreturn]] void unresolved(const std::string& label, const std::string& why) {
    fail(ErrorKind::CorruptData, "basis unresolved for " + label + ": " + why);
}

Integer to_integer(const json& v) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
        return Integer(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_string()) return Integer(v.get<std::string>());
    fail(ErrorKind::CorruptData, "expected an integer, got " + v.dump());
}

std::vector<Integer> to_integer_list(const json& v) {
    std::vector<Integer> out;
    if (v.is_array()) {
        for (const auto& x : v) out.push_back(to_integer(x));
    } else {
        out.push_back(to_integer(v));
    }
    return out;
}

bool nonsingular(std::vector<std::vector<Rational>> a) {
    size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[c]);
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational k = a[r][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= k * a[c][j];
        }
    }
    return true;
}

// Serializes cache writes to one resource key across threads in this process.
std::mutex& key_mutex(const std::string& path) {
    static std::mutex table_mutex;
    static std::map<std::string, std::mutex> mutexes;
    std::lock_guard lock(table_mutex);
    return mutexes[path];
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string sanitize(std::string key) {
    for (auto& c : key)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_')) c = '_';
    return key;
}

}  // namespace

std::string default_cache_dir() {
    if (const char* env = std::getenv("GL2TORS_CACHE"); env && *env) return env;
    return "lmfdb-cache";
}

NewformRecord record_from_lmfdb(const json& nf, const json& hecke) {
    NewformRecord r;
    r.label = nf.at("label").get<std::string>();
    r.level = nf.at("level").get<long>();
    r.weight = nf.at("weight").get<int>();
    if (r.weight != 2) fail(ErrorKind::CorruptData, "unsupported weight " + std::to_string(r.weight) + " for " + r.label);
    bool trivial = nf.contains("char_order") ? nf.at("char_order").get<long>() == 1
                                             : nf.value("char_orbit_label", std::string("a")) == "a";
    if (!trivial) fail(ErrorKind::CorruptData, "unsupported non-trivial character for " + r.label);
    r.dimension = nf.at("dim").get<int>();
    const int g = r.dimension;

    const json& poly_src = hecke.contains("field_poly") ? hecke.at("field_poly") : nf.at("field_poly");
    r.field_poly = IntPoly(to_integer_list(poly_src));
    if (r.field_poly.degree() != g || !r.field_poly.is_monic())
        fail(ErrorKind::CorruptData, "field polynomial of " + r.label + " is not monic of degree " + std::to_string(g));
    if (hecke.value("hecke_ring_cyclotomic_generator", 0L) > 0)
        unresolved(r.label, "cyclotomic Hecke ring representation");

    // Basis change: beta_i = (sum_j numerators[i][j] x^j) / denominators[i].
    bool power_basis = hecke.value("hecke_ring_power_basis", false) || g == 1;
    std::vector<std::vector<Integer>> numerators;
    std::vector<Integer> denominators;
    if (!power_basis) {
        if (!hecke.contains("hecke_ring_numerators") || !hecke.contains("hecke_ring_denominators") ||
            hecke["hecke_ring_numerators"].is_null() || hecke["hecke_ring_denominators"].is_null())
            unresolved(r.label, "no basis-change matrix");
        for (const auto& row : hecke.at("hecke_ring_numerators")) {
            auto v = to_integer_list(row);
            v.resize(static_cast<size_t>(g));
            numerators.push_back(std::move(v));
        }
        for (const auto& d : hecke.at("hecke_ring_denominators")) denominators.push_back(to_integer(d));
        if (static_cast<int>(numerators.size()) != g || static_cast<int>(denominators.size()) != g)
            unresolved(r.label, "basis-change matrix has wrong shape");
        std::vector<std::vector<Rational>> m(static_cast<size_t>(g), std::vector<Rational>(static_cast<size_t>(g)));
        for (int i = 0; i < g; ++i) {
            if (denominators[i] == 0) unresolved(r.label, "zero basis denominator");
            for (int j = 0; j < g; ++j) m[i][j] = Rational(numerators[i][j], denominators[i]);
        }
        for (auto& row : m)
            for (auto& x : row) x.canonicalize();
        if (!nonsingular(m)) unresolved(r.label, "singular basis-change matrix");
    }

    const json& ap = hecke.at("ap");
    auto primes = primes_in_range(2, 100000);
    long maxp = hecke.value("maxp", 0L);
    for (size_t i = 0; i < ap.size() && i < primes.size(); ++i) {
        long p = primes[i];
        if (maxp > 0 && p > maxp) break;
        auto c = to_integer_list(ap[i]);
        if (static_cast<int>(c.size()) != g)
            fail(ErrorKind::CorruptData, "coordinate length mismatch for " + r.label + " at p=" + std::to_string(p));
        EigenCoords coords;
        if (power_basis) {
            coords.num = std::move(c);
        } else {
            Integer den = 1;
            for (const auto& d : denominators) den = lcm(den, d);
            coords.num.assign(static_cast<size_t>(g), 0);
            for (int bi = 0; bi < g; ++bi) {
                Integer scale = den / denominators[bi];
                for (int j = 0; j < g; ++j) coords.num[j] += c[bi] * numerators[bi][j] * scale;
            }
            Integer common = den;
            for (const auto& x : coords.num) common = gcd(common, x);
            if (common != 0 && common != 1) {
                for (auto& x : coords.num) x /= common;
                den /= common;
            }
            if (den < 0) {
                den = -den;
                for (auto& x : coords.num) x = -x;
            }
            coords.den = den;
        }
        r.eigenvalues.emplace(p, std::move(coords));
        r.data_bound = p;
    }
    if (r.eigenvalues.empty()) fail(ErrorKind::CorruptData, "no eigenvalues for " + r.label);
    if (maxp > r.data_bound) r.data_bound = maxp;
    return r;
}

LmfdbClient::LmfdbClient(LmfdbConfig config) : config_(std::move(config)) {
    if (config_.cache_dir.empty()) config_.cache_dir = default_cache_dir();
}

std::string LmfdbClient::get_cached(const std::string& table, const std::string& key, const std::string& path_and_query,
                                    FetchResult& stats) {
    fs::path file = fs::path(config_.cache_dir) / table / (sanitize(key) + ".json");
    std::lock_guard key_lock(key_mutex(file.string()));
    if (fs::exists(file)) {
        ++stats.cache_hits;
        return read_file(file);
    }
    std::string resource = config_.base_url + path_and_query;
    if (config_.offline) fail(ErrorKind::Fetch, "cache miss in offline mode: " + resource);

    std::string body;
    {
        std::lock_guard lock(mutex_);
        auto now = std::chrono::steady_clock::now();
        if (last_request_.time_since_epoch().count() != 0 && now - last_request_ < config_.min_interval)
            std::this_thread::sleep_for(config_.min_interval - (now - last_request_));
        httplib::Client client(config_.base_url);
        client.set_connection_timeout(10);
        client.set_read_timeout(60);
        client.set_follow_location(true);
        auto res = client.Get(path_and_query);
        last_request_ = std::chrono::steady_clock::now();
        ++stats.network_requests;
        if (!res) fail(ErrorKind::Fetch, "request failed (" + httplib::to_string(res.error()) + "): " + resource);
        if (res->status != 200) fail(ErrorKind::Fetch, "HTTP " + std::to_string(res->status) + ": " + resource);
        body = res->body;
    }
    if (!json::accept(body)) fail(ErrorKind::Fetch, "response is not JSON: " + resource);
    fs::create_directories(file.parent_path());
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << body;
        if (!out) fail(ErrorKind::Io, "cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, file);
    return body;
}

void LmfdbClient::append_label(const std::string& label, FetchResult& out) {
    std::string q = "?label=" + httplib::detail::encode_query_param(label) + "&_format=json";
    json nf = json::parse(get_cached("mf_newforms", label, "/api/mf_newforms/" + q, out));
    json hk = json::parse(get_cached("mf_hecke_nf", label, "/api/mf_hecke_nf/" + q, out));
    auto first = [](const json& resp) -> const json* {
        if (resp.contains("data") && resp["data"].is_array() && !resp["data"].empty()) return &resp["data"][0];
        return nullptr;
    };
    const json* nf_row = first(nf);
    const json* hk_row = first(hk);
    if (!nf_row) {
        out.diagnostics.push_back({0, label, "record not found in mf_newforms"});
        return;
    }
    if (!hk_row) {
        out.diagnostics.push_back({0, label, "no eigenvalue data in mf_hecke_nf"});
        return;
    }
    try {
        out.records.push_back(record_from_lmfdb(*nf_row, *hk_row));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CorruptData) throw;
        out.diagnostics.push_back({0, label, e.what()});
    } catch (const json::exception& e) {
        out.diagnostics.push_back({0, label, std::string("malformed LMFDB row: ") + e.what()});
    }
}

FetchResult LmfdbClient::fetch_label(const std::string& label) {
    FetchResult out;
    append_label(label, out);
    return out;
}

FetchResult LmfdbClient::fetch(LevelRange levels, LevelRange dims) {
    FetchResult out;
    auto range = [](LevelRange r) {
        return "py{'$gte':" + std::to_string(r.lo) + ",'$lte':" + std::to_string(r.hi) + "}";
    };
    std::string query = "?weight=i2&char_order=i1&level=" + httplib::detail::encode_query_param(range(levels)) +
                        "&dim=" + httplib::detail::encode_query_param(range(dims)) + "&_fields=label&_format=json";
    std::string key_base = "query_level" + std::to_string(levels.lo) + "-" + std::to_string(levels.hi) + "_dim" +
                           std::to_string(dims.lo) + "-" + std::to_string(dims.hi);
    std::vector<std::string> labels;
    long offset = 0;
    for (int page = 0; page < 10000; ++page) {
        std::string path = "/api/mf_newforms/" + query + (offset ? "&_offset=" + std::to_string(offset) : "");
        json resp = json::parse(get_cached("mf_newforms", key_base + "_" + std::to_string(offset), path, out));
        const auto& data = resp.at("data");
        for (const auto& row : data) labels.push_back(row.at("label").get<std::string>());
        if (!resp.contains("next") || resp["next"].is_null() || data.empty()) break;
        offset += static_cast<long>(data.size());
    }
    for (const auto& label : labels) append_label(label, out);
    std::stable_sort(out.records.begin(), out.records.end(), record_less);
    return out;
}

}  // namespace gl2tors
