#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "evenwalk/counting.hpp"

using namespace evenwalk;

namespace {

// Additive Pascal triangle, independent of BinomialTable's construction
// only in the sense of being rebuilt here; the real cross-checks are the
// closed-form spot values below and the walk oracle elsewhere.
std::vector<std::vector<long long>> pascal_rows(int max_n) {
    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        rows[n].assign(static_cast<std::size_t>(n) + 1, 1);
        for (int r = 1; r < n; ++r) rows[n][r] = rows[n - 1][r - 1] + rows[n - 1][r];
    }
    return rows;
}

Composition comp(std::initializer_list<int> parts) { return Composition{std::vector<int>(parts)}; }

// The c_k values published for k = 0..16.
const char* kKnownCk[] = {
    "1", "2", "14", "116", "1110", "11372", "123020", "1384168",
    "16058982", "190948796", "2317085924", "28602719576", "358298116092",
    "4545807497272", "58321701832408", "755700271652816", "9878971460641414",
};

}  // namespace

TEST_CASE("binomial table spot values and Pascal cross-check") {
    BinomialTable table(30);
    CHECK(table.at(5, 0) == BigCount(1));
    CHECK(table.at(17, 0) == BigCount(1));
    CHECK(table.at(3, 2) == BigCount(3));
    CHECK(table.at(5, 2) == BigCount(10));
    CHECK(table.at(7, 9) == BigCount(0));  // r > n

    auto rows = pascal_rows(30);
    for (int n = 0; n <= 30; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(table.at(n, r) == BigCount(static_cast<std::uint64_t>(rows[n][r])));

    CHECK_THROWS_AS(table.at(31, 0), std::out_of_range);
    CHECK_THROWS_AS(table.at(-1, 0), std::invalid_argument);
}

TEST_CASE("adjacency product") {
    BinomialTable table(24);
    CHECK(adjacency_product(comp({5}), table) == BigCount(1));  // empty product
    CHECK(adjacency_product(comp({1, 1}), table) == BigCount(3));
    CHECK(adjacency_product(comp({2, 1}), table) == BigCount(10));  // C(5,2)
    CHECK(adjacency_product(comp({1, 2}), table) == BigCount(5));   // C(5,4)
    CHECK(adjacency_product(comp({1, 1, 1}), table) == BigCount(9));
    CHECK_THROWS_AS(adjacency_product(Composition{}, table), std::invalid_argument);
}

TEST_CASE("class multiplicity") {
    BinomialTable table(24);
    CHECK(class_multiplicity({{}, {2, 2}}, table) == BigCount(3));
    CHECK(class_multiplicity({{2}, {2}}, table) == BigCount(6));    // C(4,2)
    CHECK(class_multiplicity({{2, 2}, {}}, table) == BigCount(3));  // origin at the maximum
    CHECK(class_multiplicity({{}, {2, 2}}, table) == adjacency_product(comp({1, 1}), table));

    CHECK_THROWS_AS(class_multiplicity({{}, {}}, table), std::invalid_argument);
    CHECK_THROWS_AS(class_multiplicity({{}, {3}}, table), std::invalid_argument);
    CHECK_THROWS_AS(class_multiplicity({{0}, {2}}, table), std::invalid_argument);
}

TEST_CASE("class sum closed form") {
    BinomialTable table(24);
    CHECK(class_sum(comp({1}), table) == BigCount(2));
    CHECK(class_sum(comp({1, 1}), table) == BigCount(12));
    CHECK(class_sum(comp({2}), table) == BigCount(2));
    // Sum over the compositions of 2 gives c_2.
    CHECK(class_sum(comp({1, 1}), table) + class_sum(comp({2}), table) == BigCount(14));
    // 2k/n_1 alone is not integral here; multiply-then-divide must still be exact.
    CHECK(adjacency_product(comp({3, 1}), table) == BigCount(21));  // C(7,2)
    CHECK(class_sum(comp({3, 1}), table) == BigCount(56));          // (8 * 21) / 3
}

TEST_CASE("every class sum divides exactly") {
    const int kmax = 9;
    BinomialTable table(4 * kmax);
    for (int k = 1; k <= kmax; ++k)
        for (const auto& c : all_compositions(k))
            CHECK_NOTHROW(class_sum(c, table));
}

TEST_CASE("class sum equals the sum over the t+1 origin placements") {
    const int kmax = 7;
    BinomialTable table(4 * kmax);
    for (int k = 1; k <= kmax; ++k) {
        for (const auto& c : all_compositions(k)) {
            auto placements = origin_placements(c);
            REQUIRE(placements.size() == static_cast<std::size_t>(c.width()) + 1);
            BigCount sum;
            for (const auto& p : placements) sum += class_multiplicity(p, table);
            CHECK(sum == class_sum(c, table));
        }
    }
}

TEST_CASE("class sum is invariant under composition reversal") {
    const int kmax = 8;
    BinomialTable table(4 * kmax);
    for (int k = 1; k <= kmax; ++k) {
        for (const auto& c : all_compositions(k)) {
            Composition reversed = c;
            std::reverse(reversed.parts.begin(), reversed.parts.end());
            CHECK(class_sum(c, table) == class_sum(reversed, table));
        }
    }
}

TEST_CASE("c_k by composition sum reproduces the published table") {
    CHECK(ck_by_composition(0) == BigCount(1));
    CHECK(ck_by_composition(3) == BigCount(116));
    for (int k = 0; k <= 12; ++k)
        CHECK(ck_by_composition(k) == BigCount::from_decimal(kKnownCk[k]));
    CHECK(ck_by_composition(16) == BigCount::from_decimal("9878971460641414"));
}

TEST_CASE("composition sum is independent of the thread count") {
    for (int threads : {2, 3, 7}) {
        CHECK(ck_by_composition(9, threads) == BigCount::from_decimal(kKnownCk[9]));
        CHECK(ck_by_composition(1, threads) == BigCount(2));
    }
}

TEST_CASE("dynamic programming route agrees with the composition sum") {
    CHECK(ck_fast(0) == BigCount(1));
    CHECK(ck_fast(2) == BigCount(14));
    CHECK(ck_fast(12) == BigCount::from_decimal("358298116092"));
    for (int k = 0; k <= 18; ++k) CHECK(ck_fast(k) == ck_by_composition(k));
    // Past the published table and the 64-bit range.
    CHECK(ck_fast(19) == ck_by_composition(19));
    CHECK(ck_fast(19).bit_length() > 64);
}

TEST_CASE("negative k rejected") {
    CHECK_THROWS_AS(ck_fast(-1), std::invalid_argument);
    CHECK_THROWS_AS(ck_by_composition(-2), std::invalid_argument);
}
