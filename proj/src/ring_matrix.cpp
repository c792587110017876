#include "evenwalk/ring_matrix.hpp"

#include <stdexcept>

namespace evenwalk {

SignConfig::SignConfig(std::vector<int> values) : x(std::move(values)) {
    if (x.size() < 2) throw std::invalid_argument("SignConfig: order must be at least 2");
    for (int v : x) {
        if (v != 1 && v != -1) throw std::invalid_argument("SignConfig: entries must be +-1");
    }
}

SignConfig SignConfig::from_mask(int n, std::uint64_t mask) {
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : +1;
    return SignConfig(std::move(values));
}

RingMatrix::RingMatrix(SignConfig signs) {
    signs_.reserve(signs.x.size());
    for (int v : signs.x) signs_.push_back(static_cast<std::int8_t>(v));
}

std::vector<long long> RingMatrix::dense_row(int i) const {
    int n = order();
    if (i < 0 || i >= n) throw std::out_of_range("RingMatrix::dense_row");
    std::vector<long long> row(static_cast<std::size_t>(n), 0);
    // Accumulated, not assigned: at n = 2 the ring degenerates to a doubled
    // edge and both entries land on the same position.
    row[static_cast<std::size_t>((i + n - 1) % n)] += 1;                       // subdiagonal / corner (1,N)
    row[static_cast<std::size_t>((i + 1) % n)] += signs_[static_cast<std::size_t>(i)];  // superdiagonal / corner (N,1)
    return row;
}

// One application of M in displacement coordinates around column r:
// (Mv)[i] = v[i-1] + x_i * v[i+1].
template <typename Int>
__int128 RingMatrix::trace_power_impl(int m) const {
    const int n = order();
    __int128 trace = 0;

    if (2 * m + 1 <= n) {
        // Windowed: starting from e_r, after j steps only displacements
        // within [-j, j] are populated and no index wraps the ring. The
        // arrays carry one sentinel zero past each end of the window.
        const int center = m + 1;
        const std::size_t width = static_cast<std::size_t>(2 * m + 3);
        std::vector<Int> cur(width, 0);
        std::vector<Int> next(width, 0);
        for (int r = 0; r < n; ++r) {
            std::fill(cur.begin(), cur.end(), Int{0});
            std::fill(next.begin(), next.end(), Int{0});
            cur[static_cast<std::size_t>(center)] = 1;
            for (int j = 1; j <= m; ++j) {
                for (int d = -j; d <= j; ++d) {
                    int site = (r + d) % n;
                    if (site < 0) site += n;
                    next[static_cast<std::size_t>(center + d)] =
                        cur[static_cast<std::size_t>(center + d - 1)] +
                        Int{signs_[static_cast<std::size_t>(site)]} * cur[static_cast<std::size_t>(center + d + 1)];
                }
                std::swap(cur, next);
            }
            trace += cur[static_cast<std::size_t>(center)];
        }
        return trace;
    }

    // Full cyclic products for small rings or high powers.
    std::vector<Int> cur(static_cast<std::size_t>(n), 0);
    std::vector<Int> next(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        std::fill(cur.begin(), cur.end(), Int{0});
        cur[static_cast<std::size_t>(r)] = 1;
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < n; ++i) {
                int below = (i + n - 1) % n;
                int above = (i + 1) % n;
                next[static_cast<std::size_t>(i)] =
                    cur[static_cast<std::size_t>(below)] +
                    Int{signs_[static_cast<std::size_t>(i)]} * cur[static_cast<std::size_t>(above)];
            }
            std::swap(cur, next);
        }
        trace += cur[static_cast<std::size_t>(r)];
    }
    return trace;
}

__int128 RingMatrix::trace_power(int m) const {
    if (m < 0) throw std::invalid_argument("trace_power: negative power");
    if (m > 120) throw std::invalid_argument("trace_power: power above 120 would overflow the accumulator");
    if (m == 0) return order();
    // Entries of M^j are bounded by the number of j-step walks, 2^j.
    if (m <= 62) return trace_power_impl<long long>(m);
    return trace_power_impl<__int128>(m);
}

}  // namespace evenwalk
