#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "evenwalk/counting.hpp"
#include "evenwalk/walk_oracle.hpp"

using namespace evenwalk;

TEST_CASE("single walks: the figures' step sequences") {
    CHECK(is_even_visiting(WalkPath::from_string("UDUD")));
    CHECK_FALSE(is_even_visiting(WalkPath::from_string("UUDD")));  // site 2 occupied once
    // Oscillation up to two sites above the start, width 2.
    CHECK(is_even_visiting(WalkPath::from_string("UUDUDDUD")));
    // Down-side mirror.
    CHECK(is_even_visiting(WalkPath::from_string("DUDU")));
    // Empty walk is trivially even-visiting.
    CHECK(is_even_visiting(WalkPath{}));

    CHECK_THROWS_AS(is_even_visiting(WalkPath::from_string("UU")), std::invalid_argument);
    CHECK_THROWS_AS(WalkPath::from_string("UX"), std::invalid_argument);
}

TEST_CASE("visit stats") {
    auto stats = VisitStats::of(WalkPath::from_string("UUDUDDUD"));
    CHECK(stats.visit_count.at(0) == 3);  // both endpoints plus one return
    CHECK(stats.visit_count.at(1) == 4);
    CHECK(stats.visit_count.at(2) == 2);
    CHECK(stats.up_step_count.at(0) == 2);
    CHECK(stats.up_step_count.at(1) == 2);
}

TEST_CASE("site parity and edge parity criteria agree on random closed walks") {
    std::mt19937_64 rng(414);
    for (int trial = 0; trial < 500; ++trial) {
        int half = 1 + static_cast<int>(rng() % 8);
        WalkPath w;
        w.steps.assign(static_cast<std::size_t>(half), +1);
        w.steps.insert(w.steps.end(), static_cast<std::size_t>(half), -1);
        std::shuffle(w.steps.begin(), w.steps.end(), rng);
        // is_even_visiting throws internally if the two criteria disagree.
        CHECK_NOTHROW(is_even_visiting(w));
    }
}

TEST_CASE("counts at small length") {
    CHECK(count_even_visiting(0) == BigCount(1));
    CHECK(count_even_visiting(2) == BigCount(0));
    CHECK(count_even_visiting(6) == BigCount(0));   // not a multiple of 4
    CHECK(count_even_visiting(7) == BigCount(0));   // odd: cannot close
    CHECK(count_even_visiting(4) == BigCount(2));
    CHECK(count_even_visiting(8) == BigCount(14));
    CHECK(count_even_visiting(12) == BigCount(116));
}

TEST_CASE("enumeration count equals the formula for k <= 6") {
    for (int k = 0; k <= 6; ++k)
        CHECK(count_even_visiting(4 * k) == ck_by_composition(k));
}

TEST_CASE("enumeration is independent of the thread count") {
    for (int threads : {2, 5}) CHECK(count_even_visiting(12, kDefaultStepCap, threads) == BigCount(116));
}

TEST_CASE("step cap is enforced") {
    CHECK_THROWS_AS(count_even_visiting(26), std::invalid_argument);
    CHECK_THROWS_AS(count_even_visiting(-4), std::invalid_argument);
    CHECK(count_even_visiting(25, 26) == BigCount(0));  // cap raised explicitly
    CHECK_THROWS_AS(count_even_visiting(80, 80), std::invalid_argument);  // cap itself capped
}

TEST_CASE("profile buckets at length 4") {
    auto buckets = count_by_profile(4);
    REQUIRE(buckets.size() == 2);
    CHECK(buckets.at(ExponentProfile{{}, {2}}) == BigCount(1));  // UDUD
    CHECK(buckets.at(ExponentProfile{{2}, {}}) == BigCount(1));  // DUDU
}

TEST_CASE("profile buckets at length 8 match the class multiplicities") {
    auto buckets = count_by_profile(8);
    BinomialTable table(8);
    CHECK(buckets.at(ExponentProfile{{}, {2, 2}}) == BigCount(3));
    BigCount total;
    for (const auto& [profile, count] : buckets) {
        CHECK(class_multiplicity(profile, table) == count);
        total += count;
    }
    CHECK(total == BigCount(14));
}

TEST_CASE("per-width bucket totals equal class sums over compositions of that width") {
    const int k = 3;
    auto buckets = count_by_profile(4 * k);
    BinomialTable table(4 * k);

    std::map<int, BigCount> width_totals;
    for (const auto& [profile, count] : buckets)
        width_totals[static_cast<int>(profile.below.size() + profile.above.size())] += count;

    std::map<int, BigCount> expected;
    for (const auto& c : all_compositions(k)) expected[c.width()] += class_sum(c, table);

    CHECK(width_totals == expected);
}

TEST_CASE("closed walks split into even-visiting and the rest") {
    // Total closed walks of 2n steps is C(2n, n).
    BinomialTable table(16);
    for (int k = 1; k <= 3; ++k) {
        int length = 4 * k;
        std::uint64_t closed = 0;
        std::uint64_t even = 0;
        for (std::uint64_t mask = 0; mask < (1ull << length); ++mask) {
            WalkPath w;
            for (int j = 0; j < length; ++j) w.steps.push_back((mask >> j) & 1u ? +1 : -1);
            if (!w.closed()) continue;
            ++closed;
            if (is_even_visiting(w)) ++even;
        }
        CHECK(BigCount(closed) == table.at(length, length / 2));
        CHECK(BigCount(even) == count_even_visiting(length));
    }
}

TEST_CASE("every even-visiting walk has width at most k") {
    for (int k = 1; k <= 3; ++k) {
        for (const auto& [profile, count] : count_by_profile(4 * k)) {
            (void)count;
            CHECK(profile.below.size() + profile.above.size() <= static_cast<std::size_t>(k));
        }
    }
}
