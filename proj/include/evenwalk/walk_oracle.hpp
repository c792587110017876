#pragma once

#include <map>
#include <vector>

#include "evenwalk/bigcount.hpp"
#include "evenwalk/counting.hpp"

namespace evenwalk {

// A lattice walk as an explicit step sequence (+1 up, -1 down).
struct WalkPath {
    std::vector<int> steps;

    static WalkPath from_string(const char* updown);  // e.g. "UDUD"

    bool closed() const;
    std::vector<int> positions() const;  // prefix sums, positions[0] == 0
};

// Per-site occupation counts and per-edge up-step counts of a walk,
// indexed by site / lower edge endpoint relative to the origin.
struct VisitStats {
    std::map<int, int> visit_count;    // both endpoints counted at the origin
    std::map<int, int> up_step_count;  // edge (s, s+1) keyed by s

    static VisitStats of(const WalkPath& w);
};

// True iff every site other than the origin is occupied an even number of
// times. Requires a closed walk. Cross-checks the equivalent edge criterion
// (every up-step count even) and the odd occupation of the origin.
bool is_even_visiting(const WalkPath& w);

inline constexpr int kDefaultStepCap = 24;

// Brute-force count of closed even-visiting walks of the given length,
// by depth-first enumeration of all 2^length step sequences with the
// usual cannot-return pruning. Ground truth for c_k at length 4k.
BigCount count_even_visiting(int length, int step_cap = kDefaultStepCap, int threads = 1);

// Same enumeration, bucketed by the exponent profile of each accepted walk.
std::map<ExponentProfile, BigCount> count_by_profile(int length, int step_cap = kDefaultStepCap);

}  // namespace evenwalk
