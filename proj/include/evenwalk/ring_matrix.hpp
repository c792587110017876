#pragma once

#include <cstdint>
#include <vector>

namespace evenwalk {

// One realization of the +-1 random variables x_1..x_N.
struct SignConfig {
    std::vector<int> x;

    explicit SignConfig(std::vector<int> values);

    // Bit i of `mask` clear -> x_{i+1} = +1, set -> x_{i+1} = -1.
    static SignConfig from_mask(int n, std::uint64_t mask);

    int order() const { return static_cast<int>(x.size()); }
};

// The order-N ring matrix: all-ones subdiagonal with corner (1,N), random
// +-1 superdiagonal x_1..x_{N-1} with corner (N,1) = x_N. Exactly 2N
// nonzero entries, so matrix-vector products run in O(N) integer ops.
class RingMatrix {
public:
    explicit RingMatrix(SignConfig signs);

    int order() const { return static_cast<int>(signs_.size()); }
    const std::vector<std::int8_t>& signs() const { return signs_; }

    // Row i of the dense matrix (0-based), for oracle comparisons.
    std::vector<long long> dense_row(int i) const;

    // Exact integer Tr(M^m), column by column: each column of M^m is m
    // sparse products away from a basis vector. When the walk support
    // 2m+1 fits inside the ring a windowed update touches only the
    // reachable displacements. Requires 0 <= m <= 120 (the entries of
    // M^m are bounded by 2^m and must fit a signed 128-bit integer).
    __int128 trace_power(int m) const;

private:
    template <typename Int>
    __int128 trace_power_impl(int m) const;

    std::vector<std::int8_t> signs_;
};

}  // namespace evenwalk
