#pragma once

#include <string>

#include "gl2tors/torsion/survey.hpp"

namespace gl2tors {

enum class Format { Text, Csv, Structured };

Format format_from_string(const std::string& s);

inline constexpr const char* kCsvHeader = "label,level,dim,bound,G,T,sharp,stabilized";

/// Text aligns columns; csv is the fixed header plus one row; structured is
/// one JSON object on one line.
std::string render(const TorsionAnalysis& a, Format format);

/// Structured: a single JSON object holding the records and the aggregate
/// lists. Csv: header plus one row per record.
std::string render(const SurveyTables& t, Format format);

/// Inverses of the structured renderings. CorruptData on malformed input.
TorsionAnalysis parse_analysis(const std::string& structured);
SurveyTables parse_survey(const std::string& structured);

/// "1 2 3" style listing used by the text survey output.
std::string join_integers(const std::set<Integer>& xs);

}  // namespace gl2tors
