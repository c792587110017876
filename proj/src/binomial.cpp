#include "evenwalk/binomial.hpp"

#include <stdexcept>

namespace evenwalk {

BinomialTable::BinomialTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::invalid_argument("BinomialTable: negative size");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = BigCount(1);
        row[static_cast<std::size_t>(n)] = BigCount(1);
        for (int r = 1; r < n; ++r) {
            const auto& prev = rows_[static_cast<std::size_t>(n) - 1];
            row[static_cast<std::size_t>(r)] =
                prev[static_cast<std::size_t>(r) - 1] + prev[static_cast<std::size_t>(r)];
        }
    }
}

const BigCount& BinomialTable::at(int n, int r) const {
    if (n < 0 || r < 0) throw std::invalid_argument("BinomialTable: negative argument");
    if (n > max_n_) throw std::out_of_range("BinomialTable: argument exceeds table size");
    if (r > n) return zero_;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

}  // namespace evenwalk
