#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gl2tors/errors.hpp"
#include "gl2tors/newform/lmfdb.hpp"
#include "gl2tors/torsion/report.hpp"

namespace gl2tors {

enum class Command { Fetch, Validate, Analyze, Survey };

enum ExitStatus : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitData = 2,
    kExitFetch = 3,
    kExitInternal = 4,
};

struct RunConfig {
    Command command = Command::Analyze;
    /// A .jsonl file or a directory of them.
    std::string data_path;
    std::string cache_dir;
    std::string base_url = "https://www.lmfdb.org";
    bool offline = false;
    std::optional<std::string> label;
    LevelRange levels{1, 500};
    LevelRange dims{1, 5};
    std::optional<int> dimension;
    long max_level = 500;
    BoundPolicy bound;
    bool include_p2 = false;
    bool exclude_ell = false;
    Format format = Format::Text;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
    std::optional<long> required_bound;
    std::string out_path;
    bool progress = false;
};

/// Bundled dataset path compiled into the binary.
std::string default_data_path();

int exit_code_for(ErrorKind kind);

/// Executes one command; data goes to `out`, progress and errors to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gl2tors
