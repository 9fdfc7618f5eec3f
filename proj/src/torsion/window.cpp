#include "gl2tors/torsion/window.hpp"

#include "gl2tors/arith/integer.hpp"
#include "gl2tors/errors.hpp"

namespace gl2tors {

bool PrimeWindow::admits(long p) const {
    if (p < 2 || p > bound) return false;
    if (p == 2 && !include_p2) return false;
    if (level % p == 0 || excluded.count(p)) return false;
    return is_prime(Integer(p));
}

std::vector<long> PrimeWindow::admitted() const {
    std::vector<long> out;
    if (bound < 2) return out;
    for (long p : primes_in_range(2, bound))
        if (admits(p)) out.push_back(p);
    return out;
}

PrimeWindow PrimeWindow::without(long p) const {
    PrimeWindow w = *this;
    w.excluded.insert(p);
    return w;
}

PrimeWindow PrimeWindow::with_bound(long b) const {
    PrimeWindow w = *this;
    w.bound = b;
    return w;
}

PrimeWindow make_window(long level, long bound, bool include_p2) {
    if (level < 1) fail(ErrorKind::InvalidArgument, "level must be positive, got " + std::to_string(level));
    PrimeWindow w;
    w.level = level;
    w.bound = bound;
    w.include_p2 = include_p2;
    return w;
}

long first_admissible_prime(const PrimeWindow& w) {
    PrimeWindow open = w;
    for (long b = 64;; b *= 2) {
        open.bound = b;
        auto ps = open.admitted();
        if (!ps.empty()) return ps.front();
    }
}

}  // namespace gl2tors
