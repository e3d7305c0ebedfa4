#pragma once

// Tilings of GT-patterns: connected components of equal adjacent entries,
// the free-row/free-tile bookkeeping, tiling matrices with exact kernel
// dimension, the generic interior tiling, an explicit interior point, and
// the dimension formulas for GT-polytopes.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kostka/gt.hpp"
#include "kostka/weights.hpp"

namespace kostka {

/// 1-based position in the triangular index set, i <= j <= r.  Ordering is
/// the reading order of a pattern: bottom row first, left to right.
struct Cell {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Cell& a, const Cell& b) {
        return std::pair(a.j, a.i) <=> std::pair(b.j, b.i);
    }
    friend bool operator==(const Cell&, const Cell&) = default;
};

using Tile = std::vector<Cell>;

namespace detail {

inline bool cells_adjacent(const Cell& a, const Cell& b) {
    const int di = b.i - a.i;
    const int dj = b.j - a.j;
    return (di == 1 && dj == 1) || (di == 0 && dj == 1) || (di == -1 && dj == -1) ||
           (di == 0 && dj == -1);
}

}  // namespace detail

/// Partition of the index triangle into connected tiles.  Canonical form:
/// cells inside a tile and the tiles themselves are sorted in reading
/// order, so equal tilings compare equal; the free tiles (those avoiding
/// (1,1) and the top row) appear in the indexing order of the convention.
class Tiling {
public:
    Tiling(std::size_t r, std::vector<Tile> tiles) : r_(r), tiles_(std::move(tiles)) {
        if (r_ == 0) throw std::invalid_argument("tiling requires r >= 1");
        for (Tile& tile : tiles_) {
            if (tile.empty()) throw std::invalid_argument("tiles must be nonempty");
            std::sort(tile.begin(), tile.end());
            tile.erase(std::unique(tile.begin(), tile.end()), tile.end());
        }
        std::sort(tiles_.begin(), tiles_.end());
        validate();
        free_.reserve(tiles_.size());
        for (const Tile& tile : tiles_) free_.push_back(computed_free(tile));
    }

    std::size_t rank() const { return r_; }
    const std::vector<Tile>& tiles() const { return tiles_; }
    bool is_free(std::size_t k) const { return free_[k]; }
    const std::vector<bool>& free_flags() const { return free_; }

    /// Indices into tiles() of the free tiles, in convention order.
    std::vector<std::size_t> free_tile_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < tiles_.size(); ++k) {
            if (free_[k]) out.push_back(k);
        }
        return out;
    }

    std::size_t free_tile_count() const {
        return static_cast<std::size_t>(std::count(free_.begin(), free_.end(), true));
    }

    friend bool operator==(const Tiling& a, const Tiling& b) {
        return a.r_ == b.r_ && a.tiles_ == b.tiles_;
    }

private:
    bool computed_free(const Tile& tile) const {
        for (const Cell& c : tile) {
            if (c.i == 1 && c.j == 1) return false;
            if (c.j == static_cast<int>(r_)) return false;
        }
        return true;
    }

    void validate() const {
        // disjoint cover of the index triangle
        std::vector<Cell> all;
        for (const Tile& tile : tiles_) all.insert(all.end(), tile.begin(), tile.end());
        std::sort(all.begin(), all.end());
        std::size_t expected = r_ * (r_ + 1) / 2;
        if (all.size() != expected || std::adjacent_find(all.begin(), all.end()) != all.end()) {
            throw std::invalid_argument("tiles must partition the index triangle");
        }
        for (const Cell& c : all) {
            if (c.i < 1 || c.j < c.i || c.j > static_cast<int>(r_)) {
                throw std::invalid_argument("tile cell outside the index triangle");
            }
        }
        // connectivity under the adjacency moves
        for (const Tile& tile : tiles_) {
            std::vector<bool> seen(tile.size(), false);
            std::vector<std::size_t> stack = {0};
            seen[0] = true;
            std::size_t reached = 1;
            while (!stack.empty()) {
                const std::size_t at = stack.back();
                stack.pop_back();
                for (std::size_t other = 0; other < tile.size(); ++other) {
                    if (!seen[other] && detail::cells_adjacent(tile[at], tile[other])) {
                        seen[other] = true;
                        ++reached;
                        stack.push_back(other);
                    }
                }
            }
            if (reached != tile.size()) throw std::invalid_argument("tile is not connected");
        }
    }

    std::size_t r_;
    std::vector<Tile> tiles_;
    std::vector<bool> free_;
};

/// Groups the equal and adjacent entries of a GT-pattern.
inline Tiling tiling_of(const GTPattern& x) {
    if (!x.is_gt_pattern()) {
        throw std::invalid_argument("tiling is defined only for arrays satisfying the GT inequalities");
    }
    const std::size_t r = x.rank();
    const std::size_t cell_count = r * (r + 1) / 2;
    auto index = [](std::size_t i, std::size_t j) { return (j - 1) * j / 2 + (i - 1); };

    std::vector<std::size_t> parent(cell_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto merge = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    for (std::size_t j = 1; j < r; ++j) {
        for (std::size_t i = 1; i <= j; ++i) {
            if (x.entry(i, j) == x.entry(i, j + 1)) merge(index(i, j), index(i, j + 1));
            if (x.entry(i, j) == x.entry(i + 1, j + 1)) merge(index(i, j), index(i + 1, j + 1));
        }
    }

    std::vector<Tile> buckets(cell_count);
    for (std::size_t j = 1; j <= r; ++j) {
        for (std::size_t i = 1; i <= j; ++i) {
            buckets[find(index(i, j))].push_back(Cell{static_cast<int>(i), static_cast<int>(j)});
        }
    }
    std::vector<Tile> tiles;
    for (Tile& bucket : buckets) {
        if (!bucket.empty()) tiles.push_back(std::move(bucket));
    }
    return Tiling(r, std::move(tiles));
}

/// (r-2) x s integer matrix of counts of free-tile entries per free row.
class TilingMatrix {
public:
    TilingMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    explicit TilingMatrix(const std::vector<std::vector<long>>& rows)
        : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("matrix rows have unequal lengths");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
    long& at(std::size_t row, std::size_t col) { return entries_[row * cols_ + col]; }

    friend bool operator==(const TilingMatrix&, const TilingMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<long> entries_;
};

/// Column k counts, per free row, the entries of the k-th free tile; free
/// row j is pattern row j+1.
inline TilingMatrix tiling_matrix(const Tiling& tiling) {
    const std::size_t r = tiling.rank();
    const std::vector<std::size_t> free_tiles = tiling.free_tile_indices();
    TilingMatrix matrix(r >= 2 ? r - 2 : 0, free_tiles.size());
    for (std::size_t k = 0; k < free_tiles.size(); ++k) {
        for (const Cell& c : tiling.tiles()[free_tiles[k]]) {
            matrix.at(static_cast<std::size_t>(c.j) - 2, k) += 1;
        }
    }
    return matrix;
}

/// Rank over the rationals via fraction-free (Bareiss) elimination; no
/// floating point.
inline std::size_t matrix_rank(const TilingMatrix& matrix) {
    const std::size_t rows = matrix.rows(), cols = matrix.cols();
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = matrix.at(i, j);
    }

    std::size_t rank = 0;
    mpz_class previous_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t row = rank + 1; row < rows; ++row) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[row][j] = (m[rank][col] * m[row][j] - m[row][col] * m[rank][j]) / previous_pivot;
            }
            m[row][col] = 0;
        }
        previous_pivot = m[rank][col];
        ++rank;
    }
    return rank;
}

/// dim ker = s - rank, computed exactly.
inline std::size_t kernel_dimension(const TilingMatrix& matrix) {
    return matrix.cols() - matrix_rank(matrix);
}

/// Dimension of the minimal face of the GT-polytope containing x.
inline std::size_t min_face_dimension(const GTPattern& x) {
    return kernel_dimension(tiling_matrix(tiling_of(x)));
}

namespace detail {

template <typename T>
inline std::vector<std::pair<T, std::size_t>> run_lengths(const std::vector<T>& values) {
    std::vector<std::pair<T, std::size_t>> runs;
    for (const T& v : values) {
        if (!runs.empty() && runs.back().first == v) {
            ++runs.back().second;
        } else {
            runs.emplace_back(v, 1);
        }
    }
    return runs;
}

inline void require_weakly_decreasing(const WeightVector& lambda) {
    if (lambda.empty()) throw std::invalid_argument("rational partition must have r >= 1");
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
        if (lambda[i] < lambda[i + 1]) {
            throw std::invalid_argument("rational partition parts must be weakly decreasing");
        }
    }
}

// Block p of equal top-row values spans 1-based positions (lo_p, hi_p].
// Its forced triangle is { (i,j) : lo_p < i <= hi_p - (r-j) }.
struct Block {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

inline std::vector<Block> block_ranges(const std::vector<std::size_t>& counts) {
    std::vector<Block> blocks(counts.size());
    std::size_t acc = 0;
    for (std::size_t p = 0; p < counts.size(); ++p) {
        blocks[p].lo = acc;
        acc += counts[p];
        blocks[p].hi = acc;
    }
    return blocks;
}

}  // namespace detail

/// The tiling of any point in the relative interior of the polytope with
/// highest weight lambda: one triangular tile per block of equal parts,
/// the singleton (1,1) when there are m >= 2 distinct parts, and singleton
/// free tiles everywhere else.
inline Tiling generic_interior_tiling(const WeightVector& lambda) {
    detail::require_weakly_decreasing(lambda);
    const std::size_t r = lambda.size();
    const auto runs = detail::run_lengths(lambda);
    std::vector<std::size_t> counts;
    for (const auto& run : runs) counts.push_back(run.second);
    const auto blocks = detail::block_ranges(counts);

    std::set<Cell> covered;
    std::vector<Tile> tiles;
    for (const auto& block : blocks) {
        Tile triangle;
        for (std::size_t i = block.lo + 1; i <= block.hi; ++i) {
            for (std::size_t j = r - block.hi + i; j <= r; ++j) {
                triangle.push_back(Cell{static_cast<int>(i), static_cast<int>(j)});
            }
        }
        covered.insert(triangle.begin(), triangle.end());
        tiles.push_back(std::move(triangle));
    }
    for (std::size_t j = 1; j <= r; ++j) {
        for (std::size_t i = 1; i <= j; ++i) {
            const Cell c{static_cast<int>(i), static_cast<int>(j)};
            if (!covered.count(c)) tiles.push_back(Tile{c});
        }
    }
    return Tiling(r, std::move(tiles));
}

inline Tiling generic_interior_tiling(const Partition& lambda) {
    return generic_interior_tiling(to_weight_vector(lambda));
}

/// A point of the relative interior of the polytope with highest weight
/// lambda: block triangles carry the block value; the diagonals below
/// block p (p < m) are filled with strictly decreasing values, equally
/// spaced inside the open interval between the adjacent block values, read
/// diagonal by diagonal from left to right.
inline GTPattern interior_point(const WeightVector& lambda) {
    detail::require_weakly_decreasing(lambda);
    const std::size_t r = lambda.size();
    const auto runs = detail::run_lengths(lambda);
    std::vector<std::size_t> counts;
    for (const auto& run : runs) counts.push_back(run.second);
    const auto blocks = detail::block_ranges(counts);

    std::vector<std::vector<mpq_class>> rows(r);
    for (std::size_t j = 1; j <= r; ++j) rows[j - 1].assign(j, 0);
    auto put = [&](std::size_t i, std::size_t j, const mpq_class& v) { rows[j - 1][i - 1] = v; };

    for (std::size_t p = 0; p < blocks.size(); ++p) {
        for (std::size_t i = blocks[p].lo + 1; i <= blocks[p].hi; ++i) {
            for (std::size_t j = r - blocks[p].hi + i; j <= r; ++j) put(i, j, runs[p].first);
        }
    }
    for (std::size_t p = 0; p + 1 < blocks.size(); ++p) {
        std::vector<Cell> order;  // diagonals left to right, each read downward
        for (std::size_t i = blocks[p].lo + 1; i <= blocks[p].hi; ++i) {
            for (std::size_t j = r - blocks[p].hi + i - 1; j >= i; --j) {
                order.push_back(Cell{static_cast<int>(i), static_cast<int>(j)});
                if (j == i) break;
            }
        }
        const mpq_class high = runs[p].first, low = runs[p + 1].first;
        const auto L = static_cast<long>(order.size());
        for (long t = 0; t < L; ++t) {
            const mpq_class value = high - (high - low) * (t + 1) / (L + 1);
            put(static_cast<std::size_t>(order[static_cast<std::size_t>(t)].i),
                static_cast<std::size_t>(order[static_cast<std::size_t>(t)].j), value);
        }
    }
    return GTPattern(std::move(rows));
}

inline GTPattern interior_point(const Partition& lambda) {
    return interior_point(to_weight_vector(lambda));
}

namespace detail {

inline long choose2(long k) { return k >= 2 ? k * (k - 1) / 2 : 0; }

inline long degree_from_block_sizes(std::size_t r, const std::vector<std::size_t>& counts) {
    if (r <= 1) return 0;
    if (counts.size() == 1) {
        throw std::domain_error(
            "degree formula requires at least two distinct part values when r >= 2");
    }
    long degree = choose2(static_cast<long>(r) - 1);
    for (std::size_t v : counts) degree -= choose2(static_cast<long>(v));
    return degree;
}

}  // namespace detail

/// C(r-1,2) - sum_p C(v_p,2) over the multiplicities of lambda.  Defined
/// for r <= 1 (value 0) and for m >= 2; constant partitions with r >= 2
/// are outside the hypothesis and rejected.
inline long degree_formula(const Partition& lambda) {
    std::vector<std::size_t> counts;
    for (const auto& run : lambda.multiplicities()) counts.push_back(run.count);
    return detail::degree_from_block_sizes(lambda.length(), counts);
}

inline long degree_formula(const WeightVector& lambda) {
    detail::require_weakly_decreasing(lambda);
    std::vector<std::size_t> counts;
    for (const auto& run : detail::run_lengths(lambda)) counts.push_back(run.second);
    return detail::degree_from_block_sizes(lambda.size(), counts);
}

/// Dimension of the GT-polytope of the dominated pair (lambda, beta):
/// the degrees of the primitive pieces add up.
inline long dim_gt_polytope(const Partition& lambda, const Composition& beta) {
    if (!dominates(lambda, beta)) {
        throw std::domain_error("beta is not dominated by lambda: the polytope is empty");
    }
    long total = 0;
    for (const PrimitivePair& piece : primitive_decomposition(lambda, beta).pairs) {
        total += degree_formula(piece.lambda);
    }
    return total;
}

}  // namespace kostka
