#include "evenwalk/walk_oracle.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "evenwalk/parallel.hpp"

namespace evenwalk {

WalkPath WalkPath::from_string(const char* updown) {
    WalkPath w;
    for (const char* c = updown; *c; ++c) {
        switch (*c) {
            case 'U': case 'u': case '+': w.steps.push_back(+1); break;
            case 'D': case 'd': case '-': w.steps.push_back(-1); break;
            default: throw std::invalid_argument("WalkPath::from_string: expected U or D");
        }
    }
    return w;
}

bool WalkPath::closed() const {
    return std::accumulate(steps.begin(), steps.end(), 0) == 0;
}

std::vector<int> WalkPath::positions() const {
    std::vector<int> pos;
    pos.reserve(steps.size() + 1);
    pos.push_back(0);
    for (int s : steps) pos.push_back(pos.back() + s);
    return pos;
}

VisitStats VisitStats::of(const WalkPath& w) {
    VisitStats stats;
    int p = 0;
    stats.visit_count[0] = 1;  // the starting occupation
    for (int s : w.steps) {
        if (s == +1) stats.up_step_count[p] += 1;
        p += s;
        stats.visit_count[p] += 1;
    }
    return stats;
}

bool is_even_visiting(const WalkPath& w) {
    if (!w.closed()) throw std::invalid_argument("is_even_visiting: walk does not return to the origin");
    VisitStats stats = VisitStats::of(w);

    bool site_even = true;
    for (const auto& [site, count] : stats.visit_count) {
        if (site != 0 && count % 2 != 0) {
            site_even = false;
            break;
        }
    }
    bool edge_even = true;
    for (const auto& [edge, count] : stats.up_step_count) {
        (void)edge;
        if (count % 2 != 0) {
            edge_even = false;
            break;
        }
    }
    // The two formulations of the constraint coincide on closed walks.
    if (site_even != edge_even)
        throw std::logic_error("is_even_visiting: site and edge parity criteria disagree");
    if (site_even && stats.visit_count.at(0) % 2 != 1)
        throw std::logic_error("is_even_visiting: origin occupation should be odd");
    return site_even;
}

namespace {

// Shared depth-first enumeration core. Sites are offset by `half` so the
// bookkeeping arrays are plain vectors; `odd_sites` tracks how many nonzero
// sites currently have an odd occupation count, making the acceptance test
// at the leaves O(1).
struct Enumerator {
    int length;
    int half;
    std::vector<int> visit_parity;   // per site, offset by half
    std::vector<int> up_count;       // per edge (s, s+1), keyed by s + half
    std::uint64_t accepted = 0;
    int odd_sites = 0;
    std::map<ExponentProfile, std::uint64_t>* buckets = nullptr;

    explicit Enumerator(int len)
        : length(len),
          half(len / 2),
          visit_parity(static_cast<std::size_t>(len) + 1, 0),
          up_count(static_cast<std::size_t>(len) + 1, 0) {}

    void enter(int site) {
        if (site != 0) odd_sites += (visit_parity[static_cast<std::size_t>(site + half)] ^= 1) ? 1 : -1;
    }
    void leave(int site) {
        if (site != 0) odd_sites += (visit_parity[static_cast<std::size_t>(site + half)] ^= 1) ? 1 : -1;
    }

    void accept() {
        ++accepted;
        if (buckets) {
            ExponentProfile profile;
            for (int edge = -half; edge < 0; ++edge) {
                int u = up_count[static_cast<std::size_t>(edge + half)];
                if (u > 0) profile.below.push_back(u);
            }
            for (int edge = 0; edge < half; ++edge) {
                int u = up_count[static_cast<std::size_t>(edge + half)];
                if (u > 0) profile.above.push_back(u);
            }
            (*buckets)[profile] += 1;
        }
    }

    void dfs(int pos, int remaining) {
        if (remaining == 0) {
            if (odd_sites == 0) accept();
            return;
        }
        // A step is viable only if the walk can still get back to 0.
        if (std::abs(pos + 1) <= remaining - 1) {
            up_count[static_cast<std::size_t>(pos + half)] += 1;
            enter(pos + 1);
            dfs(pos + 1, remaining - 1);
            leave(pos + 1);
            up_count[static_cast<std::size_t>(pos + half)] -= 1;
        }
        if (std::abs(pos - 1) <= remaining - 1) {
            enter(pos - 1);
            dfs(pos - 1, remaining - 1);
            leave(pos - 1);
        }
    }

    // Replays a fixed step prefix (bit 1 = up, most significant step first),
    // explores the remaining subtree, and unwinds its bookkeeping so the
    // enumerator can be reused for the next prefix.
    void run_prefix(std::uint64_t mask, int prefix_len) {
        int pos = 0;
        int applied = 0;
        bool dead = false;
        for (int j = 0; j < prefix_len; ++j) {
            int step = ((mask >> (prefix_len - 1 - j)) & 1u) ? +1 : -1;
            if (std::abs(pos + step) > length - (j + 1)) {  // cannot close anymore
                dead = true;
                break;
            }
            if (step == +1) up_count[static_cast<std::size_t>(pos + half)] += 1;
            pos += step;
            enter(pos);
            ++applied;
        }
        if (!dead) dfs(pos, length - prefix_len);
        for (int j = applied; j-- > 0;) {
            int step = ((mask >> (prefix_len - 1 - j)) & 1u) ? +1 : -1;
            leave(pos);
            pos -= step;
            if (step == +1) up_count[static_cast<std::size_t>(pos + half)] -= 1;
        }
    }
};

void check_enumeration_bounds(int length, int step_cap) {
    if (length < 0) throw std::invalid_argument("walk enumeration: negative length");
    if (length > step_cap)
        throw std::invalid_argument("walk enumeration: length exceeds the step cap");
    if (step_cap > 62) throw std::invalid_argument("walk enumeration: step cap above 62 is not supported");
}

}  // namespace

BigCount count_even_visiting(int length, int step_cap, int threads) {
    check_enumeration_bounds(length, step_cap);
    if (length == 0) return BigCount(1);  // the empty walk
    if (length % 2 != 0) return BigCount(0);  // an odd walk cannot close

    // Subtrees below a fixed prefix are independent, so split on prefixes.
    int prefix_len = length < 12 ? length : 12;
    std::uint64_t prefixes = 1ull << prefix_len;
    auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
        Enumerator e(length);
        std::uint64_t local = 0;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            e.accepted = 0;
            e.run_prefix(mask, prefix_len);
            local += e.accepted;
        }
        return local;
    };
    std::uint64_t total = chunked_reduce<std::uint64_t>(
        prefixes, threads, 0,
        chunk, [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
    return BigCount(total);
}

std::map<ExponentProfile, BigCount> count_by_profile(int length, int step_cap) {
    check_enumeration_bounds(length, step_cap);
    std::map<ExponentProfile, std::uint64_t> buckets;
    if (length == 0) {
        return {};
    }
    Enumerator e(length);
    e.buckets = &buckets;
    e.dfs(0, length);

    std::map<ExponentProfile, BigCount> out;
    for (const auto& [profile, count] : buckets) {
        for (int u : profile.below)
            if (u % 2 != 0) throw std::logic_error("count_by_profile: odd exponent on accepted walk");
        for (int u : profile.above)
            if (u % 2 != 0) throw std::logic_error("count_by_profile: odd exponent on accepted walk");
        out.emplace(profile, BigCount(count));
    }
    return out;
}

}  // namespace evenwalk
