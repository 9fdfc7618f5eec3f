#include "gl2tors/newform/sturm.hpp"

#include <algorithm>
#include <string>

#include "gl2tors/errors.hpp"

namespace gl2tors {

long gamma0_index(long level) {
    if (level < 1) fail(ErrorKind::InvalidArgument, "level must be >= 1, got " + std::to_string(level));
    long num = level, rest = level;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        num = num / p * (p + 1);
    }
    if (rest > 1) num = num / rest * (rest + 1);
    return num;
}

SturmBound sturm_bound(long level, int weight) {
    if (weight < 1) fail(ErrorKind::InvalidArgument, "weight must be positive");
    long value = weight * gamma0_index(level) / 12;
    if (value == 0) return {1, true};
    return {value, false};
}

long required_data_bound(long level) {
    return std::max(2 * sturm_bound(level, 2).value, 100L);
}

}  // namespace gl2tors
