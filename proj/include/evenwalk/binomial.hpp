#pragma once

#include <cstddef>
#include <vector>

#include "evenwalk/bigcount.hpp"

namespace evenwalk {

// Triangular table of exact binomial coefficients, built once with Pascal's
// rule and read-only afterwards (safe to share across reduction threads).
// Every binomial appearing in a length-4k walk count has top argument
// at most 4k-1, so size the table with max_n = 4*k_max.
class BinomialTable {
public:
    explicit BinomialTable(int max_n);

    int max_n() const { return max_n_; }

    // C(n, r); zero when r > n, as the insertion formulas expect.
    const BigCount& at(int n, int r) const;

private:
    int max_n_;
    std::vector<std::vector<BigCount>> rows_;
    BigCount zero_;
};

}  // namespace evenwalk
