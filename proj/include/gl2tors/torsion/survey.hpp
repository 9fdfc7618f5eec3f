#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gl2tors/errors.hpp"
#include "gl2tors/torsion/analysis.hpp"

namespace gl2tors {

struct SurveyFailure {
    std::string label;
    long level = 0;
    ErrorKind kind = ErrorKind::InternalConsistency;
    std::string message;
};

struct SurveyTables {
    int dimension = 0;
    long max_level = 0;
    /// Sorted by (level, label).
    std::vector<TorsionAnalysis> analyses;
    /// Every T, sorted, with repetitions.
    std::vector<Integer> predicted_orders;
    /// The three lists: distinct T, distinct T with T = G, primes dividing some T.
    std::set<Integer> orders;
    std::set<Integer> sharp_orders;
    std::set<long> primes;
    std::set<Integer> divisor_closure;
    size_t sharp_count = 0;
    size_t unknown_count = 0;
    /// Labels whose G changes when the bound doubles.
    std::vector<std::string> unstable;
    std::vector<SurveyFailure> failures;
};

struct SurveyOptions {
    BoundPolicy policy;
    EngineConfig engine;
    /// 0 picks the hardware concurrency.
    unsigned jobs = 0;
    /// Called from worker threads after each record, serialized.
    std::function<void(size_t done, size_t total)> progress;
};

/// Analyzes every record of dimension `dim` with level <= max_level. Per-record
/// errors are collected in `failures`, never thrown.
SurveyTables survey(const std::vector<NewformRecord>& records, int dim, long max_level, const SurveyOptions& options = {});

/// Recomputes the aggregate fields from `analyses`.
void aggregate(SurveyTables& t);

}  // namespace gl2tors
