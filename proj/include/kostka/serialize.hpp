#pragma once

// JSON wire formats for tilings, tiling matrices, and polynomials, plus
// the ASCII rendering of a tiled pattern.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "kostka/stretch.hpp"
#include "kostka/tiling.hpp"

namespace kostka {

using ordered_json = nlohmann::ordered_json;

/// {"r": r, "tiles": [[[i,j], ...], ...], "free": [bool, ...]}
inline ordered_json tiling_to_json(const Tiling& tiling) {
    ordered_json tiles = ordered_json::array();
    for (const Tile& tile : tiling.tiles()) {
        ordered_json cells = ordered_json::array();
        for (const Cell& c : tile) cells.push_back({c.i, c.j});
        tiles.push_back(std::move(cells));
    }
    ordered_json free = ordered_json::array();
    for (bool f : tiling.free_flags()) free.push_back(f);
    return ordered_json{{"r", tiling.rank()}, {"tiles", std::move(tiles)}, {"free", std::move(free)}};
}

inline Tiling tiling_from_json(const ordered_json& j) {
    const auto r = j.at("r").get<std::size_t>();
    std::vector<Tile> tiles;
    for (const auto& cells : j.at("tiles")) {
        Tile tile;
        for (const auto& cell : cells) {
            if (!cell.is_array() || cell.size() != 2) {
                throw std::invalid_argument("tile cells must be [i, j] pairs");
            }
            tile.push_back(Cell{cell[0].get<int>(), cell[1].get<int>()});
        }
        tiles.push_back(std::move(tile));
    }
    Tiling tiling(r, std::move(tiles));
    if (j.contains("free")) {
        const auto& free = j.at("free");
        if (free.size() != tiling.tiles().size()) {
            throw std::invalid_argument("free flag count does not match the tile count");
        }
        for (std::size_t k = 0; k < tiling.tiles().size(); ++k) {
            if (free[k].get<bool>() != tiling.is_free(k)) {
                throw std::invalid_argument("free flags disagree with the tile positions");
            }
        }
    }
    return tiling;
}

/// {"rows": R, "cols": C, "entries": [row-major integers]}
inline ordered_json matrix_to_json(const TilingMatrix& matrix) {
    ordered_json entries = ordered_json::array();
    for (std::size_t row = 0; row < matrix.rows(); ++row) {
        for (std::size_t col = 0; col < matrix.cols(); ++col) entries.push_back(matrix.at(row, col));
    }
    return ordered_json{{"rows", matrix.rows()}, {"cols", matrix.cols()}, {"entries", std::move(entries)}};
}

inline TilingMatrix matrix_from_json(const ordered_json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols) {
        throw std::invalid_argument("matrix entry count does not match rows * cols");
    }
    TilingMatrix matrix(rows, cols);
    std::size_t at = 0;
    for (std::size_t row = 0; row < rows; ++row) {
        for (std::size_t col = 0; col < cols; ++col) matrix.at(row, col) = entries[at++].get<long>();
    }
    return matrix;
}

/// {"coeffs": ["p/q", ...]}, constant term first.
inline ordered_json polynomial_to_json(const RationalPolynomial& polynomial) {
    ordered_json coeffs = ordered_json::array();
    for (const mpq_class& c : polynomial.coefficients()) coeffs.push_back(c.get_str());
    return ordered_json{{"coeffs", std::move(coeffs)}};
}

inline RationalPolynomial polynomial_from_json(const ordered_json& j) {
    std::vector<mpq_class> coefficients;
    for (const auto& c : j.at("coeffs")) {
        coefficients.push_back(detail::parse_rational(c.get<std::string>()));
    }
    return RationalPolynomial(std::move(coefficients));
}

/// Triangle of tile labels, top row first, matching the usual drawing of a
/// pattern.  Labels are A, B, ... in the canonical tile order; the legend
/// belongs to the caller.
inline std::string render_tiling(const Tiling& tiling) {
    const std::size_t r = tiling.rank();
    std::vector<std::string> labels(tiling.tiles().size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        std::size_t v = k;
        std::string label;
        do {
            label.insert(label.begin(), static_cast<char>('A' + v % 26));
            v = v / 26;
        } while (v-- > 0);
        labels[k] = label;
    }
    std::size_t width = 1;
    for (const std::string& label : labels) width = std::max(width, label.size());
    width = (width + 2) / 2 * 2;  // a gap after the widest label, kept even for row alignment

    std::vector<std::vector<std::size_t>> owner(r + 1);
    for (std::size_t j = 1; j <= r; ++j) owner[j].assign(j + 1, 0);
    for (std::size_t k = 0; k < tiling.tiles().size(); ++k) {
        for (const Cell& c : tiling.tiles()[k]) {
            owner[static_cast<std::size_t>(c.j)][static_cast<std::size_t>(c.i)] = k;
        }
    }

    std::string out;
    for (std::size_t j = r; j >= 1; --j) {
        out.append((r - j) * width / 2, ' ');
        for (std::size_t i = 1; i <= j; ++i) {
            std::string label = labels[owner[j][i]];
            label.append(width - label.size(), ' ');
            out += label;
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

}  // namespace kostka
