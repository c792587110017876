#include "evenwalk/counting.hpp"

#include <stdexcept>

#include "evenwalk/parallel.hpp"

namespace evenwalk {

namespace {

void require_even_exponents(const std::vector<int>& exponents) {
    for (int e : exponents) {
        if (e < 2 || e % 2 != 0)
            throw std::invalid_argument("class_multiplicity: exponents must be even and >= 2");
    }
}

// Divides value by divisor in place, insisting on an exact division.
void exact_divide(BigCount& value, int divisor) {
    if (value.divmod_u32(static_cast<std::uint32_t>(divisor)) != 0)
        throw std::logic_error("class sum: 2k * product not divisible by the leading part");
}

}  // namespace

BigCount adjacency_product(const Composition& c, const BinomialTable& binomials) {
    if (c.parts.empty()) throw std::invalid_argument("adjacency_product: empty composition");
    BigCount product(1);
    // One factor per adjacent pair: 2b new two-step excursions dropped into
    // the 2a maxima of the walk built so far.
    for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) {
        int a2 = 2 * c.parts[i];
        int b2 = 2 * c.parts[i + 1];
        product *= binomials.at(b2 + a2 - 1, b2);
    }
    return product;
}

BigCount class_multiplicity(const ExponentProfile& profile, const BinomialTable& binomials) {
    if (profile.below.empty() && profile.above.empty())
        throw std::invalid_argument("class_multiplicity: empty profile");
    require_even_exponents(profile.below);
    require_even_exponents(profile.above);

    BigCount count(1);
    // Upward chain: insert each level into the maxima of the level beneath it.
    const auto& up = profile.above;
    for (std::size_t i = 0; i + 1 < up.size(); ++i)
        count *= binomials.at(up[i + 1] + up[i] - 1, up[i + 1]);
    // Downward chain, built outward from the origin; the factor picks the
    // exponent of the lower of the two edges.
    const auto& down = profile.below;
    for (std::size_t i = 0; i + 1 < down.size(); ++i)
        count *= binomials.at(down[i] + down[i + 1] - 1, down[i]);
    // Crossing the origin: the origin level is occupied once more than its
    // up-edge exponent, so the insertion slot count gains one and the -1
    // in the binomial drops out.
    if (!down.empty() && !up.empty())
        count *= binomials.at(down.back() + up.front(), down.back());
    return count;
}

std::vector<ExponentProfile> origin_placements(const Composition& c) {
    if (c.parts.empty()) throw std::invalid_argument("origin_placements: empty composition");
    std::vector<int> exponents;
    exponents.reserve(c.parts.size());
    for (int p : c.parts) exponents.push_back(2 * p);

    // The exponent sequence is fixed in site order; only the split point
    // (the origin) moves through the t+1 possible positions.
    std::vector<ExponentProfile> placements;
    placements.reserve(exponents.size() + 1);
    for (std::size_t split = 0; split <= exponents.size(); ++split) {
        ExponentProfile p;
        p.below.assign(exponents.begin(), exponents.end() - static_cast<std::ptrdiff_t>(split));
        p.above.assign(exponents.end() - static_cast<std::ptrdiff_t>(split), exponents.end());
        placements.push_back(std::move(p));
    }
    return placements;
}

BigCount class_sum(const Composition& c, const BinomialTable& binomials) {
    if (c.parts.empty()) throw std::invalid_argument("class_sum: empty composition");
    int k = c.k();
    BigCount sum = adjacency_product(c, binomials);
    sum *= BigCount(static_cast<std::uint64_t>(2 * k));
    exact_divide(sum, c.parts.front());
    return sum;
}

BigCount ck_by_composition(int k, int threads) {
    if (k < 0) throw std::invalid_argument("ck_by_composition: negative k");
    if (k == 0) return BigCount(1);  // the empty walk

    BinomialTable binomials(4 * k);
    std::uint64_t total = composition_count(k);
    auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
        BigCount acc;
        CompositionCursor cur = CompositionCursor::at(k, begin);
        for (std::uint64_t i = begin; i < end; ++i) {
            acc += class_sum(cur.current(), binomials);
            cur.next();
        }
        return acc;
    };
    return chunked_reduce<BigCount>(
        total, threads, BigCount(),
        chunk, [](BigCount& acc, BigCount&& part) { acc += part; });
}

BigCount ck_fast(int k) {
    if (k < 0) throw std::invalid_argument("ck_fast: negative k");
    if (k == 0) return BigCount(1);

    BinomialTable binomials(4 * k);
    // g[m][a]: adjacency products of all compositions of m with first part a,
    // indexed 1..k. Filled bottom-up over m.
    std::vector<std::vector<BigCount>> g(static_cast<std::size_t>(k) + 1);
    for (int m = 1; m <= k; ++m) {
        auto& row = g[static_cast<std::size_t>(m)];
        row.resize(static_cast<std::size_t>(m) + 1);
        for (int a = 1; a <= m; ++a) {
            BigCount acc = (a == m) ? BigCount(1) : BigCount(0);
            for (int b = 1; b <= m - a; ++b) {
                acc += binomials.at(2 * b + 2 * a - 1, 2 * b) *
                       g[static_cast<std::size_t>(m) - static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            }
            row[static_cast<std::size_t>(a)] = std::move(acc);
        }
    }

    BigCount ck;
    for (int a = 1; a <= k; ++a) {
        BigCount term = g[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
        term *= BigCount(static_cast<std::uint64_t>(2 * k));
        if (term.divmod_u32(static_cast<std::uint32_t>(a)) != 0)
            throw std::logic_error("ck_fast: 2k * g(k,a) not divisible by a");
        ck += term;
    }
    return ck;
}

}  // namespace evenwalk
