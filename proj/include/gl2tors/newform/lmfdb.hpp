#pragma once

#include <chrono>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "gl2tors/newform/dataset.hpp"

namespace gl2tors {

struct LmfdbConfig {
    std::string base_url = "https://www.lmfdb.org";
    std::string cache_dir;
    std::chrono::milliseconds min_interval{500};
    /// Serve from cache only; a cache miss is a fetch error.
    bool offline = false;
};

struct LevelRange {
    long lo = 1;
    long hi = 1;
};

struct FetchResult {
    std::vector<NewformRecord> records;
    std::vector<Diagnostic> diagnostics;
    long network_requests = 0;
    long cache_hits = 0;
};

/// Cache root: the GL2TORS_CACHE environment variable, else "lmfdb-cache".
std::string default_cache_dir();

/// Build a record from one mf_newforms row and the matching mf_hecke_nf row.
/// Eigenvalues given in a non-power Hecke-ring basis are converted with the
/// row's basis-change data; absent or singular data raises CorruptData whose
/// message starts with "basis unresolved".
NewformRecord record_from_lmfdb(const nlohmann::json& newform, const nlohmann::json& hecke_nf);

/// Client for the public LMFDB JSON API with an on-disk response cache.
/// Raw responses are stored under cache_dir/<table>/<key>.json and replayed
/// byte-for-byte on later calls; network requests are spaced by min_interval.
class LmfdbClient {
public:
    explicit LmfdbClient(LmfdbConfig config);

    /// All weight-2 trivial-character newforms with level and dimension in range.
    FetchResult fetch(LevelRange levels, LevelRange dimensions);
    FetchResult fetch_label(const std::string& label);

    const LmfdbConfig& config() const { return config_; }

private:
    std::string get_cached(const std::string& table, const std::string& key, const std::string& path_and_query,
                           FetchResult& stats);
    void append_label(const std::string& label, FetchResult& out);

    LmfdbConfig config_;
    std::mutex mutex_;
    std::chrono::steady_clock::time_point last_request_{};
};

}  // namespace gl2tors
