#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "evenwalk/composition.hpp"

using evenwalk::all_compositions;
using evenwalk::Composition;
using evenwalk::composition_count;
using evenwalk::CompositionCursor;

namespace {

// Independent enumeration: recursive first-part expansion, sorted later.
void brute_force(int k, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (k == 0) {
        out.push_back(Composition{prefix});
        return;
    }
    for (int first = 1; first <= k; ++first) {
        prefix.push_back(first);
        brute_force(k - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

TEST_CASE("k = 1 has the single composition [1]") {
    auto all = all_compositions(1);
    REQUIRE(all.size() == 1);
    CHECK(all[0].parts == std::vector<int>{1});
}

TEST_CASE("k = 3 lists all four compositions in lexicographic order") {
    auto all = all_compositions(3);
    REQUIRE(all.size() == 4);
    CHECK(all[0].parts == std::vector<int>{1, 1, 1});
    CHECK(all[1].parts == std::vector<int>{1, 2});
    CHECK(all[2].parts == std::vector<int>{2, 1});
    CHECK(all[3].parts == std::vector<int>{3});
}

TEST_CASE("count is 2^(k-1)") {
    CHECK(composition_count(1) == 1);
    CHECK(composition_count(10) == 512);
    CHECK(all_compositions(10).size() == 512);
    CHECK_THROWS_AS(composition_count(0), std::invalid_argument);
    CHECK_THROWS_AS(CompositionCursor(0), std::invalid_argument);
}

TEST_CASE("stream matches brute-force enumeration, strictly increasing") {
    for (int k = 1; k <= 9; ++k) {
        std::vector<Composition> expected;
        std::vector<int> prefix;
        brute_force(k, prefix, expected);
        std::sort(expected.begin(), expected.end(),
                  [](const Composition& a, const Composition& b) { return a.parts < b.parts; });

        auto got = all_compositions(k);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].parts == expected[i].parts);
            CHECK(got[i].k() == k);
            CHECK(got[i].width() >= 1);
            if (i > 0) CHECK(got[i - 1].parts < got[i].parts);  // no duplicates possible
        }
    }
}

TEST_CASE("random access matches sequential iteration") {
    const int k = 8;
    CompositionCursor cur(k);
    std::uint64_t rank = 0;
    do {
        CHECK(cur.rank() == rank);
        auto jumped = CompositionCursor::at(k, rank);
        CHECK(jumped.current() == cur.current());
        ++rank;
    } while (cur.next());
    CHECK(rank == composition_count(k));
    CHECK_THROWS_AS(CompositionCursor::at(k, composition_count(k)), std::out_of_range);
}

TEST_CASE("contiguous chunks cover the stream exactly once") {
    const int k = 7;
    std::uint64_t total = composition_count(k);
    std::set<std::vector<int>> seen;
    const std::uint64_t bounds[] = {0, 10, 17, 41, total};
    for (int c = 0; c < 4; ++c) {
        CompositionCursor cur = CompositionCursor::at(k, bounds[c]);
        for (std::uint64_t i = bounds[c]; i < bounds[c + 1]; ++i) {
            CHECK(seen.insert(cur.current().parts).second);
            cur.next();
        }
    }
    CHECK(seen.size() == total);
}
