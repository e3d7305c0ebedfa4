#pragma once

// Weight vectors (compositions and partitions), the dominance order, and
// the factorization of a dominated pair into primitive pairs.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kostka {

// A run of equal parts inside a partition.
struct PartMultiplicity {
    long value = 0;
    std::size_t count = 0;

    friend bool operator==(const PartMultiplicity&, const PartMultiplicity&) = default;
};

/// Sequence of nonnegative integers with explicit length.  Trailing zeros
/// are significant: (4,2,2) and (4,2,2,0,0,0) are different objects.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<long> parts) : parts_(std::move(parts)) {
        for (long p : parts_) {
            if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
        }
    }

    // Parses "4,2,2,0,0,0" (comma-separated, no spaces).  "" is the empty
    // composition.
    static Composition parse(std::string_view text) {
        std::vector<long> parts;
        if (!text.empty()) {
            std::size_t pos = 0;
            while (true) {
                const std::size_t comma = text.find(',', pos);
                const std::string_view token =
                    text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
                long value = 0;
                const auto [ptr, ec] =
                    std::from_chars(token.data(), token.data() + token.size(), value);
                if (ec != std::errc{} || ptr != token.data() + token.size()) {
                    throw std::invalid_argument("malformed weight vector: '" + std::string(text) + "'");
                }
                parts.push_back(value);
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        }
        return Composition(std::move(parts));
    }

    std::size_t length() const { return parts_.size(); }
    const std::vector<long>& parts() const { return parts_; }
    long operator[](std::size_t i) const { return parts_[i]; }

    long sum() const {
        long total = 0;
        for (long p : parts_) total += p;
        return total;
    }

    bool is_weakly_decreasing() const {
        return std::is_sorted(parts_.rbegin(), parts_.rend());
    }

    Composition scaled(long n) const {
        std::vector<long> parts = parts_;
        for (long& p : parts) p *= n;
        return Composition(std::move(parts));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    auto operator<=>(const Composition&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Composition& c) {
        return os << '(' << c.to_string() << ')';
    }

private:
    std::vector<long> parts_;
};

/// Weakly decreasing composition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long> parts) : Partition(Composition(std::move(parts))) {}

    explicit Partition(Composition c) : c_(std::move(c)) {
        if (!c_.is_weakly_decreasing()) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    static Partition parse(std::string_view text) { return Partition(Composition::parse(text)); }

    std::size_t length() const { return c_.length(); }
    const std::vector<long>& parts() const { return c_.parts(); }
    long operator[](std::size_t i) const { return c_[i]; }
    long sum() const { return c_.sum(); }
    const Composition& as_composition() const { return c_; }
    std::string to_string() const { return c_.to_string(); }

    Partition scaled(long n) const {
        if (n < 0) throw std::invalid_argument("scale factor must be nonnegative");
        return Partition(c_.scaled(n));
    }

    // Run-length encoding of the parts: strictly decreasing values, all
    // counts >= 1, counts summing to the length.
    std::vector<PartMultiplicity> multiplicities() const {
        std::vector<PartMultiplicity> runs;
        for (long p : c_.parts()) {
            if (!runs.empty() && runs.back().value == p) {
                ++runs.back().count;
            } else {
                runs.push_back({p, 1});
            }
        }
        return runs;
    }

    auto operator<=>(const Partition&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << '(' << p.to_string() << ')';
    }

private:
    Composition c_;
};

/// prt(beta): the weakly decreasing rearrangement.
inline Partition sort_to_partition(const Composition& beta) {
    std::vector<long> parts = beta.parts();
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

namespace detail {

// Walks the prefix-sum comparison between lambda and prt(beta).  Returns
// {dominated, strict everywhere before the last index}.
inline std::pair<bool, bool> dominance_walk(const Partition& lambda, const Composition& beta) {
    if (lambda.length() != beta.length()) {
        throw std::invalid_argument("weight vectors have different lengths");
    }
    const Partition sorted = sort_to_partition(beta);
    if (lambda.sum() != sorted.sum()) return {false, false};
    const std::size_t r = lambda.length();
    bool strict = true;
    long lhs = 0, rhs = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        lhs += lambda[i];
        rhs += sorted[i];
        if (lhs < rhs) return {false, false};
        if (lhs == rhs) strict = false;
    }
    return {true, strict};
}

}  // namespace detail

/// beta is dominated by lambda: equal sizes and every proper prefix sum of
/// lambda weakly exceeds that of prt(beta).  Length mismatch is an error.
inline bool dominates(const Partition& lambda, const Composition& beta) {
    return detail::dominance_walk(lambda, beta).first;
}

/// Dominance with all proper prefix-sum inequalities strict.
inline bool is_primitive_pair(const Partition& lambda, const Composition& beta) {
    const auto [dominated, strict] = detail::dominance_walk(lambda, beta);
    return dominated && strict;
}

struct PrimitivePair {
    Partition lambda;
    Partition beta;

    friend bool operator==(const PrimitivePair&, const PrimitivePair&) = default;
};

/// The unique concatenation of (lambda, prt(beta)) into primitive pairs.
/// split_indices holds 1 = i_1 < ... < i_{s+1} = r+1; piece t covers the
/// 1-based positions [i_t, i_{t+1}).
struct PrimitivePairList {
    std::vector<PrimitivePair> pairs;
    std::vector<std::size_t> split_indices;

    friend bool operator==(const PrimitivePairList&, const PrimitivePairList&) = default;
};

/// Splits (lambda, prt(beta)) at every position where the prefix sums
/// coincide.  Requires dominates(lambda, beta); a primitive input comes
/// back as a single pair, the empty input as zero pairs.
inline PrimitivePairList primitive_decomposition(const Partition& lambda, const Composition& beta) {
    if (!dominates(lambda, beta)) {
        throw std::domain_error("beta is not dominated by lambda: no primitive decomposition exists");
    }
    const Partition sorted = sort_to_partition(beta);
    const std::size_t r = lambda.length();

    PrimitivePairList result;
    if (r == 0) {
        result.split_indices = {1};
        return result;
    }

    std::vector<std::size_t> starts = {0};  // 0-based block start offsets
    long lhs = 0, rhs = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        lhs += lambda[i];
        rhs += sorted[i];
        if (lhs == rhs) starts.push_back(i + 1);
    }
    starts.push_back(r);

    for (std::size_t t = 0; t + 1 < starts.size(); ++t) {
        const auto begin = static_cast<std::ptrdiff_t>(starts[t]);
        const auto end = static_cast<std::ptrdiff_t>(starts[t + 1]);
        PrimitivePair piece{
            Partition(std::vector<long>(lambda.parts().begin() + begin,
                                             lambda.parts().begin() + end)),
            Partition(std::vector<long>(sorted.parts().begin() + begin,
                                             sorted.parts().begin() + end))};
        if (!is_primitive_pair(piece.lambda, piece.beta.as_composition())) {
            throw std::logic_error("primitive decomposition produced a non-primitive piece");
        }
        result.pairs.push_back(std::move(piece));
    }
    result.split_indices.reserve(starts.size());
    for (std::size_t s : starts) result.split_indices.push_back(s + 1);
    return result;
}

}  // namespace kostka
