#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "gl2tors/newform/record.hpp"

namespace gl2tors {

struct Diagnostic {
    long line = 0;  // 1-based; 0 when not tied to a line
    std::string label;
    std::string message;
};

struct ParsedDataset {
    std::vector<NewformRecord> records;  // sorted by (level, label)
    std::vector<Diagnostic> diagnostics;
};

/// One canonical JSON object per line (no insignificant whitespace,
/// eigenvalues sorted by p). Integers outside the signed 64-bit range are
/// written as decimal strings.
std::string serialize_record(const NewformRecord& r);

/// Parse a single line; throws Error(CorruptData) with a diagnostic message.
NewformRecord parse_record(const std::string& line);

/// Malformed lines become diagnostics; I/O failure raises Io and a stream
/// with no valid records raises EmptyDataset.
ParsedDataset parse_dataset(std::istream& in);
ParsedDataset load_dataset(const std::string& path);
void write_dataset(const std::string& path, const std::vector<NewformRecord>& records);

enum class DatasetSource { Local, LmfdbCache };

struct DatasetManifest {
    DatasetSource source = DatasetSource::Local;
    long record_count = 0;
    std::map<int, long> per_dimension;
    std::string data_bound_policy = "max(2*sturm_bound(N,2), 100)";

    std::string summary() const;
};

DatasetManifest make_manifest(const std::vector<NewformRecord>& records, DatasetSource source);

}  // namespace gl2tors
