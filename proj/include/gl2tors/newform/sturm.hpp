#pragma once

namespace gl2tors {

struct SturmBound {
    long value;
    /// floor(k mu / 12) was 0 and has been promoted to 1.
    bool degenerate;
};

/// Index of Gamma_0(N) in SL_2(Z): N * prod_{p | N} (1 + 1/p).
long gamma0_index(long level);

/// floor(k * [SL_2(Z) : Gamma_0(N)] / 12), promoted to 1 when it would be 0.
SturmBound sturm_bound(long level, int weight = 2);

/// Primes needed in a record: max(2 * sturm_bound(N, 2), 100).
long required_data_bound(long level);

}  // namespace gl2tors
