#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evenwalk/bigcount.hpp"
#include "evenwalk/ring_matrix.hpp"

namespace evenwalk {

// Average of (1/N) Tr M^m over sign configurations, either exhaustive
// (exact rational, denominator dividing N * 2^N) or Monte-Carlo
// (mean and standard error from exact integer trace sums).
struct MomentEstimate {
    int n = 0;
    int power = 0;           // m, the matrix power (4k when a c_k estimate)
    bool exhaustive = false;
    std::uint64_t samples = 0;  // 2^N in exhaustive mode
    std::uint64_t seed = 0;     // MC mode only
    __int128 trace_sum = 0;
    __int128 trace_sq_sum = 0;

    double mean() const;       // trace_sum / (n * samples)
    double std_error() const;  // sample stddev / sqrt(samples), MC mode
    double z_score(const BigCount& expected) const;

    // Exhaustive helpers.
    std::string exact_value() const;              // reduced fraction, e.g. "14" or "3/4"
    bool exact_equals(const BigCount& value) const;
    bool exact_is_zero() const { return trace_sum == 0; }
};

inline constexpr int kExhaustiveOrderCap = 20;  // 2^20 sign configurations
inline constexpr int kExhaustivePowerCap = 60;  // keeps the 128-bit trace sum exact

// Exhaustive average of (1/N) Tr M^m over all 2^N sign configurations.
MomentEstimate exact_power_average(int n, int m, int threads = 1);

// Exhaustive estimate of c_k, i.e. exact_power_average(n, 4k). Matches c_k
// exactly whenever n >= 4k+2 (no walk of 4k steps can wind around the ring).
MomentEstimate exact_moment(int n, int k, int threads = 1);

inline bool moment_matches_ck(int n, int k) { return n >= 4 * k + 2; }

// Seeded Monte-Carlo estimate of c_k. Sample i draws its signs from a
// SplitMix64 stream whose state is derived from (seed, i) alone, so the
// result is bit-identical for any thread count or sample order.
MomentEstimate mc_moment(int n, int k, std::uint64_t samples, std::uint64_t seed, int threads = 1);

// The documented per-sample derivation, exposed for tests.
std::vector<int> mc_sample_signs(int n, std::uint64_t seed, std::uint64_t sample_index);

// One row of the resolvent expansion G(z) = sum_k c_k / z^(4k+1).
struct SeriesRow {
    int k = 0;
    long long exponent = 0;  // 4k+1
    BigCount ck;
    bool has_ratio = false;
    double ratio = 0.0;   // c_k / c_{k-1}
    double growth = 0.0;  // (c_k / c_{k-1})^(1/4), per-step growth estimate
};

using SeriesTable = std::vector<SeriesRow>;

SeriesTable resolvent_series(int kmax, const std::function<BigCount(int)>& coefficient_source);

}  // namespace evenwalk
