#pragma once

// Seeded generation of random rational partitions for the interior-point
// sweeps.  Uses raw engine draws instead of std::uniform_int_distribution
// so a fixed seed reproduces the same partitions everywhere.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "kostka/gt.hpp"

namespace kostka {

/// Weakly decreasing vector of r rationals with a random block structure:
/// a random number of blocks, random positive block sizes, and distinct
/// random block values (numerators in [-24, 48], denominators in [1, 8]).
inline WeightVector random_rational_partition(std::mt19937_64& engine, std::size_t r) {
    if (r == 0) return {};
    const std::size_t m = 1 + static_cast<std::size_t>(engine() % r);

    // random composition of r into m positive parts: m-1 distinct cuts
    std::set<std::size_t> cuts;
    while (cuts.size() + 1 < m) cuts.insert(1 + static_cast<std::size_t>(engine() % (r - 1)));
    std::vector<std::size_t> bounds(cuts.begin(), cuts.end());
    bounds.push_back(r);

    std::set<mpq_class> distinct;
    while (distinct.size() < m) {
        const long num = static_cast<long>(engine() % 73) - 24;
        const long den = 1 + static_cast<long>(engine() % 8);
        mpq_class value(num, den);
        value.canonicalize();
        distinct.insert(value);
    }
    std::vector<mpq_class> values(distinct.rbegin(), distinct.rend());  // descending

    WeightVector lambda;
    lambda.reserve(r);
    std::size_t start = 0;
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t i = start; i < bounds[p]; ++i) lambda.push_back(values[p]);
        start = bounds[p];
    }
    return lambda;
}

}  // namespace kostka
