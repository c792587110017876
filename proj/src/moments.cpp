#include "evenwalk/moments.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "evenwalk/parallel.hpp"

namespace evenwalk {

namespace {

struct TraceSums {
    __int128 sum = 0;
    __int128 sq_sum = 0;
};

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix_next(std::uint64_t& state) {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

double MomentEstimate::mean() const {
    return static_cast<double>(trace_sum) /
           (static_cast<double>(n) * static_cast<double>(samples));
}

double MomentEstimate::std_error() const {
    if (samples < 2) throw std::logic_error("MomentEstimate: standard error needs >= 2 samples");
    double count = static_cast<double>(samples);
    double m1 = mean();
    double mean_sq = static_cast<double>(trace_sq_sum) / (static_cast<double>(n) * static_cast<double>(n) * count);
    double variance = (mean_sq - m1 * m1) * count / (count - 1.0);
    if (variance < 0.0) variance = 0.0;  // rounding at zero variance
    return std::sqrt(variance / count);
}

double MomentEstimate::z_score(const BigCount& expected) const {
    double se = std_error();
    double delta = mean() - expected.to_double();
    if (se == 0.0) return delta == 0.0 ? 0.0 : INFINITY;
    return delta / se;
}

std::string MomentEstimate::exact_value() const {
    std::uint64_t denom = static_cast<std::uint64_t>(n) * samples;
    bool negative = trace_sum < 0;
    unsigned __int128 mag =
        negative ? -static_cast<unsigned __int128>(trace_sum) : static_cast<unsigned __int128>(trace_sum);
    std::uint64_t g = std::gcd(static_cast<std::uint64_t>(mag % denom), denom);
    mag /= g;
    std::uint64_t q = denom / g;
    std::string out = (negative ? "-" : "") + BigCount::from_uint128(mag).to_decimal();
    if (q != 1) out += "/" + std::to_string(q);
    return out;
}

bool MomentEstimate::exact_equals(const BigCount& value) const {
    if (trace_sum < 0) return false;
    BigCount lhs = BigCount::from_uint128(static_cast<unsigned __int128>(trace_sum));
    BigCount rhs = value * BigCount(static_cast<std::uint64_t>(n) * samples);
    return lhs == rhs;
}

MomentEstimate exact_power_average(int n, int m, int threads) {
    if (n < 2 || n > kExhaustiveOrderCap)
        throw std::invalid_argument("exact_power_average: order must lie in [2, 20]");
    if (m < 0 || m > kExhaustivePowerCap)
        throw std::invalid_argument("exact_power_average: power must lie in [0, 60]");

    std::uint64_t configs = 1ull << n;
    auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
        TraceSums sums;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            RingMatrix matrix(SignConfig::from_mask(n, mask));
            __int128 t = matrix.trace_power(m);
            sums.sum += t;
            sums.sq_sum += t * t;
        }
        return sums;
    };
    TraceSums total = chunked_reduce<TraceSums>(
        configs, threads, TraceSums{},
        chunk, [](TraceSums& acc, TraceSums&& part) {
            acc.sum += part.sum;
            acc.sq_sum += part.sq_sum;
        });

    MomentEstimate est;
    est.n = n;
    est.power = m;
    est.exhaustive = true;
    est.samples = configs;
    est.trace_sum = total.sum;
    est.trace_sq_sum = total.sq_sum;
    return est;
}

MomentEstimate exact_moment(int n, int k, int threads) {
    if (k < 0) throw std::invalid_argument("exact_moment: negative k");
    return exact_power_average(n, 4 * k, threads);
}

std::vector<int> mc_sample_signs(int n, std::uint64_t seed, std::uint64_t sample_index) {
    // Stream state depends on (seed, index) only; samples are independent
    // of the order in which they are drawn.
    std::uint64_t state = seed ^ (kGolden * (sample_index + 1));
    state = (state ^ (state >> 32)) * 0xD6E8FEB86659FD93ull;

    std::vector<int> signs(static_cast<std::size_t>(n));
    std::uint64_t word = 0;
    for (int i = 0; i < n; ++i) {
        if (i % 64 == 0) word = splitmix_next(state);
        signs[static_cast<std::size_t>(i)] = (word >> (i % 64)) & 1u ? -1 : +1;
    }
    return signs;
}

MomentEstimate mc_moment(int n, int k, std::uint64_t samples, std::uint64_t seed, int threads) {
    if (n < 2 || n > 1024) throw std::invalid_argument("mc_moment: order must lie in [2, 1024]");
    if (k < 0 || k > 10) throw std::invalid_argument("mc_moment: k must lie in [0, 10]");
    if (samples < 2 || samples > 100000000ull)
        throw std::invalid_argument("mc_moment: samples must lie in [2, 1e8]");

    int m = 4 * k;
    auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
        TraceSums sums;
        for (std::uint64_t i = begin; i < end; ++i) {
            RingMatrix matrix(SignConfig(mc_sample_signs(n, seed, i)));
            __int128 t = matrix.trace_power(m);
            sums.sum += t;
            sums.sq_sum += t * t;
        }
        return sums;
    };
    TraceSums total = chunked_reduce<TraceSums>(
        samples, threads, TraceSums{},
        chunk, [](TraceSums& acc, TraceSums&& part) {
            acc.sum += part.sum;
            acc.sq_sum += part.sq_sum;
        });

    MomentEstimate est;
    est.n = n;
    est.power = m;
    est.exhaustive = false;
    est.samples = samples;
    est.seed = seed;
    est.trace_sum = total.sum;
    est.trace_sq_sum = total.sq_sum;
    return est;
}

SeriesTable resolvent_series(int kmax, const std::function<BigCount(int)>& coefficient_source) {
    if (kmax < 0) throw std::invalid_argument("resolvent_series: negative kmax");
    SeriesTable table;
    table.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        SeriesRow row;
        row.k = k;
        row.exponent = 4ll * k + 1;
        row.ck = coefficient_source(k);
        if (k > 0) {
            row.has_ratio = true;
            row.ratio = BigCount::ratio(row.ck, table.back().ck);
            row.growth = std::pow(row.ratio, 0.25);
        }
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace evenwalk
