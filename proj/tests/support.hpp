#pragma once

// Shared test machinery: exhaustive enumeration of small partitions and
// compositions, and a brute-force pattern enumerator used as an oracle.
// The enumerator materializes every integer pattern under a fixed top row
// by plain interlacing recursion, with no row-sum pruning and no
// memoization, so it shares nothing with the production counter.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "kostka/gt.hpp"
#include "kostka/weights.hpp"

namespace testsupport {

// All weakly decreasing vectors of nonnegative integers with the given
// length and sum (trailing zeros included).
inline std::vector<kostka::Partition> partitions_with(long sum, std::size_t length) {
    std::vector<kostka::Partition> out;
    std::vector<long> parts(length, 0);
    auto place = [&](auto&& self, std::size_t at, long remaining, long cap) -> void {
        if (at == length) {
            if (remaining == 0) out.push_back(kostka::Partition(parts));
            return;
        }
        const long hi = std::min(cap, remaining);
        for (long v = hi; v >= 0; --v) {
            if (v * static_cast<long>(length - at) < remaining) break;  // cannot reach the sum
            parts[at] = v;
            self(self, at + 1, remaining - v, v);
            parts[at] = 0;
        }
    };
    if (length == 0) {
        if (sum == 0) out.push_back(kostka::Partition(std::vector<long>{}));
        return out;
    }
    place(place, 0, sum, sum);
    return out;
}

// All vectors of nonnegative integers with the given length and sum.
inline std::vector<kostka::Composition> compositions_with(long sum, std::size_t length) {
    std::vector<kostka::Composition> out;
    std::vector<long> parts(length, 0);
    auto place = [&](auto&& self, std::size_t at, long remaining) -> void {
        if (at + 1 == length) {
            parts[at] = remaining;
            out.push_back(kostka::Composition(parts));
            parts[at] = 0;
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            parts[at] = v;
            self(self, at + 1, remaining - v);
            parts[at] = 0;
        }
    };
    if (length == 0) {
        if (sum == 0) out.push_back(kostka::Composition(std::vector<long>{}));
        return out;
    }
    place(place, 0, sum);
    return out;
}

// Every integer GT-pattern whose top row is lambda.
inline std::vector<kostka::GTPattern> integer_patterns_with_top_row(const kostka::Partition& lambda) {
    std::vector<kostka::GTPattern> out;
    const std::size_t r = lambda.length();
    if (r == 0) return out;

    std::vector<std::vector<long>> rows(r);
    rows[r - 1].assign(lambda.parts().begin(), lambda.parts().end());

    auto materialize = [&] {
        std::vector<std::vector<mpq_class>> exact(r);
        for (std::size_t j = 0; j < r; ++j) {
            exact[j].assign(rows[j].begin(), rows[j].end());
        }
        out.push_back(kostka::GTPattern(std::move(exact)));
    };

    // descend row by row; inside a row, pick entry i from the interval
    // between the two entries above it
    auto descend = [&](auto&& self, std::size_t level, std::size_t at) -> void {
        if (level == 0) {
            materialize();
            return;
        }
        if (at == level) {
            self(self, level - 1, 0);
            return;
        }
        const std::vector<long>& above = rows[level];
        rows[level - 1].resize(level);
        for (long v = above[at + 1]; v <= above[at]; ++v) {
            rows[level - 1][at] = v;
            self(self, level, at + 1);
        }
    };
    descend(descend, r - 1, 0);
    return out;
}

// Oracle count: materialized patterns with the requested weight.
inline mpz_class brute_force_kostka(const kostka::Partition& lambda, const kostka::Composition& beta) {
    if (lambda.length() != beta.length()) return 0;
    if (lambda.length() == 0) return 1;
    const kostka::WeightVector target = kostka::to_weight_vector(beta);
    mpz_class count = 0;
    for (const kostka::GTPattern& x : integer_patterns_with_top_row(lambda)) {
        if (x.wt() == target) ++count;
    }
    return count;
}

}  // namespace testsupport
