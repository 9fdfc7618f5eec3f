#include "gl2tors/torsion/survey.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

#include "gl2tors/arith/integer.hpp"

namespace gl2tors {

void aggregate(SurveyTables& t) {
    t.predicted_orders.clear();
    t.orders.clear();
    t.sharp_orders.clear();
    t.primes.clear();
    t.divisor_closure.clear();
    t.unstable.clear();
    t.sharp_count = t.unknown_count = 0;
    for (const auto& a : t.analyses) {
        t.predicted_orders.push_back(a.T);
        t.orders.insert(a.T);
        if (a.sharp == Tristate::True) {
            t.sharp_orders.insert(a.T);
            ++t.sharp_count;
        } else if (a.sharp == Tristate::Unknown) {
            ++t.unknown_count;
        }
        if (a.stabilization == Tristate::False) t.unstable.push_back(a.label);
    }
    std::sort(t.predicted_orders.begin(), t.predicted_orders.end());
    for (const auto& T : t.orders) {
        for (const auto& d : divisors(T)) t.divisor_closure.insert(d);
        if (T > 1)
            for (const auto& p : prime_divisors(T)) t.primes.insert(p.get_si());
    }
}

SurveyTables survey(const std::vector<NewformRecord>& records, int dim, long max_level, const SurveyOptions& options) {
    std::vector<const NewformRecord*> todo;
    for (const auto& r : records)
        if (r.dimension == dim && r.level <= max_level) todo.push_back(&r);
    std::sort(todo.begin(), todo.end(), [](auto* a, auto* b) { return record_less(*a, *b); });

    std::vector<std::optional<TorsionAnalysis>> results(todo.size());
    std::vector<std::optional<SurveyFailure>> errors(todo.size());
    std::atomic<size_t> next{0};
    std::mutex progress_mutex;
    size_t done = 0;
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < todo.size();) {
            const auto& r = *todo[i];
            try {
                results[i] = predicted_torsion_order(r, options.policy, options.engine);
            } catch (const Error& e) {
                errors[i] = SurveyFailure{r.label, r.level, e.kind(), e.what()};
            } catch (const std::exception& e) {
                errors[i] = SurveyFailure{r.label, r.level, ErrorKind::InternalConsistency, e.what()};
            }
            if (options.progress) {
                std::lock_guard lock(progress_mutex);
                options.progress(++done, todo.size());
            }
        }
    };
    unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<size_t>(jobs, std::max<size_t>(todo.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SurveyTables t;
    t.dimension = dim;
    t.max_level = max_level;
    for (size_t i = 0; i < todo.size(); ++i) {
        if (results[i]) t.analyses.push_back(std::move(*results[i]));
        if (errors[i]) t.failures.push_back(std::move(*errors[i]));
    }
    aggregate(t);
    return t;
}

}  // namespace gl2tors
