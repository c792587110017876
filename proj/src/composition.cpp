#include "evenwalk/composition.hpp"

#include <numeric>
#include <stdexcept>

namespace evenwalk {

int Composition::k() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::uint64_t composition_count(int k) {
    if (k < 1) throw std::invalid_argument("composition_count: k must be >= 1 (c_0 is a special case)");
    if (k > 63) throw std::invalid_argument("composition_count: 2^(k-1) exceeds 64 bits");
    return 1ull << (k - 1);
}

CompositionCursor::CompositionCursor(int k) {
    composition_count(k);  // validates k
    k_ = k;
    current_.parts.assign(static_cast<std::size_t>(k), 1);
}

CompositionCursor CompositionCursor::at(int k, std::uint64_t rank) {
    if (rank >= composition_count(k)) throw std::out_of_range("CompositionCursor::at: rank out of range");
    CompositionCursor cur;
    cur.k_ = k;
    cur.rank_ = rank;
    cur.current_.parts.clear();
    int part = 1;
    for (int boundary = k - 2; boundary >= 0; --boundary) {
        if ((rank >> boundary) & 1u) {
            ++part;
        } else {
            cur.current_.parts.push_back(part);
            part = 1;
        }
    }
    cur.current_.parts.push_back(part);
    return cur;
}

bool CompositionCursor::next() {
    auto& p = current_.parts;
    if (p.size() <= 1) return false;
    // Successor of [..., a, b]: replace the tail (a, b) by a+1 followed
    // by b-1 ones. This is the lexicographic step and advances the rank by 1.
    int b = p.back();
    p.pop_back();
    p.back() += 1;
    p.insert(p.end(), static_cast<std::size_t>(b) - 1, 1);
    ++rank_;
    return true;
}

std::vector<Composition> all_compositions(int k) {
    std::vector<Composition> out;
    out.reserve(composition_count(k));
    CompositionCursor cur(k);
    do {
        out.push_back(cur.current());
    } while (cur.next());
    return out;
}

}  // namespace evenwalk
