#pragma once

#include <cstdint>
#include <vector>

namespace evenwalk {

// Ordered partition of k into positive parts. k has exactly 2^(k-1) of them.
struct Composition {
    std::vector<int> parts;

    int k() const;
    int width() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const Composition&, const Composition&) = default;
};

std::uint64_t composition_count(int k);  // 2^(k-1); requires 1 <= k <= 63

// Streams the compositions of k in lexicographic order by parts
// ([1,1,1] < [1,2] < [2,1] < [3]). Rank r corresponds to the k-1 bit
// flags of r read most-significant first, a set bit joining two unit
// cells into the same part; ranks therefore run 0 .. 2^(k-1)-1 and
// at(k, r) gives O(k) random access for chunked parallel reduction.
class CompositionCursor {
public:
    explicit CompositionCursor(int k);          // first composition [1,1,...,1]
    static CompositionCursor at(int k, std::uint64_t rank);

    const Composition& current() const { return current_; }
    std::uint64_t rank() const { return rank_; }

    // Advances to the lexicographic successor; false once exhausted.
    bool next();

private:
    CompositionCursor() = default;
    int k_ = 0;
    std::uint64_t rank_ = 0;
    Composition current_;
};

// All compositions of k, materialized. Intended for small k (tests, identities).
std::vector<Composition> all_compositions(int k);

}  // namespace evenwalk
