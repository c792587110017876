#pragma once

#include <vector>

#include "evenwalk/bigcount.hpp"
#include "evenwalk/binomial.hpp"
#include "evenwalk/composition.hpp"

namespace evenwalk {

// Exponents with which the edge variables of an even-visiting walk occur,
// split at the origin: `below` holds the exponents of the edges strictly
// below the origin (lowest edge first), `above` those of the edges at or
// above it. All entries are even and >= 2; their halves sum to k for a
// walk of 4k steps.
struct ExponentProfile {
    std::vector<int> below;
    std::vector<int> above;

    friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;
    friend auto operator<=>(const ExponentProfile&, const ExponentProfile&) = default;
};

// Multiplicity of one-sided walks (minimum site at the origin) whose edge
// exponents are 2*parts[i]: the product of one insertion binomial
// C(2b+2a-1, 2b) per adjacent pair (a, b). Single part -> empty product -> 1.
BigCount adjacency_product(const Composition& c, const BinomialTable& binomials);

// Number of even-visiting walks realizing exactly this profile. Chains of
// insertion binomials on both sides of the origin; crossing the origin the
// insertion has one extra slot (the origin is occupied an odd number of
// times), giving the factor C(below.back()+above.front(), below.back()).
BigCount class_multiplicity(const ExponentProfile& profile, const BinomialTable& binomials);

// The t+1 origin placements of a width-t composition, lowest origin first.
std::vector<ExponentProfile> origin_placements(const Composition& c);

// Sum of the t+1 class multiplicities of c, evaluated in closed form as
// (2k/n_1) * adjacency_product(c). Always an exact integer: the product is
// multiplied by 2k first and only then divided by the leading part, with a
// zero-remainder assertion (a nonzero remainder means a formula bug).
BigCount class_sum(const Composition& c, const BinomialTable& binomials);

// c_k: even-visiting closed walks of 4k steps, summed over all 2^(k-1)
// compositions of k. threads <= 1 runs sequentially; the reduction is a
// plain integer sum, so the result is independent of the chunking.
BigCount ck_by_composition(int k, int threads = 1);

// Same value through a dynamic-programming contraction of the composition
// sum: g(m, a) = [m == a] + sum_b C(2b+2a-1, 2b) g(m-a, b) accumulates the
// adjacency products of all compositions of m with leading part a, and
// c_k = sum_a (2k * g(k, a)) / a. Runs in ~k^3 big-integer operations.
BigCount ck_fast(int k);

}  // namespace evenwalk
