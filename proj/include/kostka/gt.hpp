#pragma once

// Gelfand-Tsetlin patterns and exact Kostka counting: the interlacing
// inequalities, weight maps, a row-sum-pruned lattice-point counter, the
// independent semistandard-tableau counter, and Schur monomial expansion.

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kostka/weights.hpp"

namespace kostka {

/// Length-r vector of exact rationals.
using WeightVector = std::vector<mpq_class>;

inline WeightVector to_weight_vector(const Composition& c) {
    WeightVector v;
    v.reserve(c.length());
    for (long p : c.parts()) v.emplace_back(p);
    return v;
}

inline WeightVector to_weight_vector(const Partition& p) { return to_weight_vector(p.as_composition()); }

/// Triangular rational array x(i,j), 1 <= i <= j <= r, stored as rows
/// bottom-up: row j holds (x(1,j), ..., x(j,j)).  The interlacing
/// inequalities are a separate assertion, not a construction invariant.
class GTPattern {
public:
    explicit GTPattern(std::vector<std::vector<mpq_class>> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw std::invalid_argument("pattern must have at least one row");
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            if (rows_[j].size() != j + 1) {
                throw std::invalid_argument("row " + std::to_string(j + 1) + " must have " +
                                            std::to_string(j + 1) + " entries");
            }
        }
    }

    /// The pattern with x(i,j) = lambda_i, the single point of the polytope
    /// with highest weight = weight = lambda.
    static GTPattern constant(const WeightVector& lambda) {
        if (lambda.empty()) throw std::invalid_argument("pattern must have at least one row");
        std::vector<std::vector<mpq_class>> rows(lambda.size());
        for (std::size_t j = 0; j < lambda.size(); ++j) {
            rows[j].assign(lambda.begin(), lambda.begin() + static_cast<std::ptrdiff_t>(j + 1));
        }
        return GTPattern(std::move(rows));
    }

    static GTPattern constant(const Partition& lambda) { return constant(to_weight_vector(lambda)); }

    std::size_t rank() const { return rows_.size(); }

    /// 1-based access, i <= j <= r.
    const mpq_class& entry(std::size_t i, std::size_t j) const {
        if (i < 1 || j < i || j > rows_.size()) throw std::out_of_range("pattern index out of range");
        return rows_[j - 1][i - 1];
    }

    const std::vector<mpq_class>& row(std::size_t j) const { return rows_[j - 1]; }
    const std::vector<std::vector<mpq_class>>& rows() const { return rows_; }

    /// Top row (x(1,r), ..., x(r,r)).
    WeightVector hwt() const { return rows_.back(); }

    /// Consecutive row-sum differences: beta_j = rowsum(j) - rowsum(j-1).
    WeightVector wt() const {
        WeightVector beta;
        beta.reserve(rows_.size());
        mpq_class previous = 0;
        for (const auto& row : rows_) {
            mpq_class sum = 0;
            for (const mpq_class& x : row) sum += x;
            beta.push_back(sum - previous);
            previous = sum;
        }
        return beta;
    }

    /// Checks x(i,j+1) >= x(i,j) >= x(i+1,j+1) for 1 <= i <= j <= r-1.
    bool is_gt_pattern() const {
        for (std::size_t j = 1; j + 1 <= rows_.size(); ++j) {
            for (std::size_t i = 1; i <= j; ++i) {
                if (entry(i, j + 1) < entry(i, j)) return false;
                if (entry(i, j) < entry(i + 1, j + 1)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const GTPattern&, const GTPattern&) = default;

private:
    std::vector<std::vector<mpq_class>> rows_;
};

namespace detail {

inline mpq_class parse_rational(const std::string& token) {
    mpq_class value;
    if (value.set_str(token, 10) != 0) {
        throw std::invalid_argument("malformed rational entry: '" + token + "'");
    }
    if (value.get_den() == 0) throw std::invalid_argument("zero denominator in entry: '" + token + "'");
    value.canonicalize();
    return value;
}

inline std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace detail

/// Parses the row-per-line text format, bottom row first; entries are
/// integers or "p/q" rationals separated by whitespace.
inline GTPattern parse_pattern(std::string_view text) {
    std::vector<std::vector<mpq_class>> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::vector<mpq_class> row;
        std::string token;
        while (fields >> token) row.push_back(detail::parse_rational(token));
        if (row.empty()) continue;  // blank lines are allowed
        rows.push_back(std::move(row));
    }
    return GTPattern(std::move(rows));
}

inline std::string format_pattern(const GTPattern& x) {
    std::string out;
    for (std::size_t j = 1; j <= x.rank(); ++j) {
        for (std::size_t i = 1; i <= j; ++i) {
            if (i > 1) out += ' ';
            out += detail::rational_to_string(x.entry(i, j));
        }
        out += '\n';
    }
    return out;
}

namespace detail {

// Counts integer GT-patterns below a fixed row by dynamic programming.
// The weight pins every row sum, so each level enumerates only the
// interlacing integer rows with the required sum; completions below a row
// depend on nothing else, which makes the row the whole memo key.
class LatticePointCounter {
public:
    explicit LatticePointCounter(std::vector<long> row_sums) : row_sums_(std::move(row_sums)) {}

    mpz_class count_below(const std::vector<long>& row) {
        const std::size_t level = row.size();
        if (level == 1) return 1;
        if (auto it = memo_.find(row); it != memo_.end()) return it->second;

        // y[i] ranges over [row[i+1], row[i]]; prune with the extremal sums
        // still reachable from each suffix.
        const std::size_t n = level - 1;
        std::vector<long> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            suffix_lo[i] = suffix_lo[i + 1] + row[i + 1];
            suffix_hi[i] = suffix_hi[i + 1] + row[i];
        }

        mpz_class total = 0;
        std::vector<long> y(n);
        enumerate(row, y, 0, row_sums_[n - 1], suffix_lo, suffix_hi, total);
        memo_.emplace(row, total);
        return total;
    }

private:
    void enumerate(const std::vector<long>& row, std::vector<long>& y, std::size_t i,
                   long remaining, const std::vector<long>& suffix_lo,
                   const std::vector<long>& suffix_hi, mpz_class& total) {
        if (i == y.size()) {
            total += count_below(y);
            return;
        }
        const long lo = std::max(row[i + 1], remaining - suffix_hi[i + 1]);
        const long hi = std::min(row[i], remaining - suffix_lo[i + 1]);
        for (long v = lo; v <= hi; ++v) {  // lexicographic, for deterministic traces
            y[i] = v;
            enumerate(row, y, i + 1, remaining - v, suffix_lo, suffix_hi, total);
        }
    }

    std::vector<long> row_sums_;
    std::map<std::vector<long>, mpz_class> memo_;
};

}  // namespace detail

/// Exact number of integer GT-patterns with highest weight lambda and
/// weight beta; zero when the polytope is empty.
inline mpz_class count_lattice_points(const Partition& lambda, const Composition& beta) {
    if (lambda.length() != beta.length()) {
        throw std::invalid_argument("weight vectors have different lengths");
    }
    if (lambda.sum() != beta.sum()) return 0;
    const std::size_t r = lambda.length();
    if (r == 0) return 1;

    std::vector<long> row_sums(r);
    long acc = 0;
    for (std::size_t j = 0; j < r; ++j) {
        acc += beta[j];
        row_sums[j] = acc;
    }
    detail::LatticePointCounter counter(std::move(row_sums));
    return counter.count_below(lambda.parts());
}

namespace detail {

// Plain backtracking SSYT filler: rows weakly increase, columns strictly
// increase, value v is spent from content[v].  Kept deliberately naive and
// separate from the lattice-point DP so the two counts are independent.
class SsytCounter {
public:
    SsytCounter(std::vector<long> shape, std::vector<long> content)
        : shape_(std::move(shape)), content_(std::move(content)) {
        grid_.resize(shape_.size());
        for (std::size_t row = 0; row < shape_.size(); ++row) {
            grid_[row].assign(static_cast<std::size_t>(shape_[row]), 0);
        }
    }

    mpz_class count() {
        mpz_class total = 0;
        fill(0, 0, total);
        return total;
    }

private:
    void fill(std::size_t row, std::size_t col, mpz_class& total) {
        if (row == grid_.size()) {
            total += 1;
            return;
        }
        if (col == grid_[row].size()) {
            fill(row + 1, 0, total);
            return;
        }
        std::size_t lo = row;  // column strictness forces value >= row index
        if (col > 0) lo = std::max(lo, grid_[row][col - 1]);
        if (row > 0) lo = std::max(lo, grid_[row - 1][col] + 1);
        for (std::size_t v = lo; v < content_.size(); ++v) {
            if (content_[v] == 0) continue;
            --content_[v];
            grid_[row][col] = v;
            fill(row, col + 1, total);
            ++content_[v];
        }
    }

    std::vector<long> shape_;
    std::vector<long> content_;
    std::vector<std::vector<std::size_t>> grid_;
};

}  // namespace detail

/// Number of semistandard Young tableaux of shape lambda and content beta
/// with entries in 1..r.  Independent oracle for count_lattice_points.
inline mpz_class kostka_ssyt(const Partition& lambda, const Composition& beta) {
    if (lambda.length() != beta.length()) {
        throw std::invalid_argument("weight vectors have different lengths");
    }
    if (lambda.sum() != beta.sum()) return 0;
    std::vector<long> shape;
    for (long p : lambda.parts()) {
        if (p > 0) shape.push_back(p);
    }
    detail::SsytCounter counter(std::move(shape), beta.parts());
    return counter.count();
}

/// Monomial expansion of the Schur polynomial in r variables: the map
/// beta -> K(lambda, beta) over compositions of |lambda| with length r,
/// zero coefficients omitted.  Enumerates every tableau, so intended for
/// small shapes.
inline std::map<Composition, mpz_class> schur_monomials(const Partition& lambda) {
    const std::size_t r = lambda.length();
    std::vector<long> shape;
    for (long p : lambda.parts()) {
        if (p > 0) shape.push_back(p);
    }

    std::map<Composition, mpz_class> expansion;
    std::vector<std::vector<std::size_t>> grid(shape.size());
    for (std::size_t row = 0; row < shape.size(); ++row) {
        grid[row].assign(static_cast<std::size_t>(shape[row]), 0);
    }
    std::vector<long> content(r, 0);

    auto fill = [&](auto&& self, std::size_t row, std::size_t col) -> void {
        if (row == grid.size()) {
            expansion[Composition(content)] += 1;
            return;
        }
        if (col == grid[row].size()) {
            self(self, row + 1, 0);
            return;
        }
        std::size_t lo = row;
        if (col > 0) lo = std::max(lo, grid[row][col - 1]);
        if (row > 0) lo = std::max(lo, grid[row - 1][col] + 1);
        for (std::size_t v = lo; v < r; ++v) {
            ++content[v];
            grid[row][col] = v;
            self(self, row, col + 1);
            --content[v];
        }
    };
    fill(fill, 0, 0);
    return expansion;
}

}  // namespace kostka
