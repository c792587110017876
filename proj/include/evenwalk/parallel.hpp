#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace evenwalk {

// Splits [0, total) into one contiguous chunk per worker and merges the
// per-chunk results in chunk order, so the outcome does not depend on the
// thread count for any associative-commutative merge.
//
// chunk_fn: R(uint64_t begin, uint64_t end)
// merge_fn: void(R& accumulator, R&& chunk_result)
template <typename R, typename ChunkFn, typename MergeFn>
R chunked_reduce(std::uint64_t total, int threads, R init, ChunkFn chunk_fn, MergeFn merge_fn) {
    if (threads < 1) threads = 1;
    auto workers = static_cast<std::uint64_t>(threads);
    if (workers > total) workers = total == 0 ? 1 : total;

    if (workers <= 1) {
        R acc = std::move(init);
        if (total > 0) merge_fn(acc, chunk_fn(0, total));
        return acc;
    }

    std::vector<R> results(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t base = total / workers;
    std::uint64_t extra = total % workers;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t len = base + (w < extra ? 1 : 0);
        std::uint64_t end = begin + len;
        pool.emplace_back([&results, w, begin, end, &chunk_fn] { results[w] = chunk_fn(begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();

    R acc = std::move(init);
    for (auto& r : results) merge_fn(acc, std::move(r));
    return acc;
}

}  // namespace evenwalk
