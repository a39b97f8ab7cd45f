#pragma once

#include <string>
#include <vector>

#include "rigidity/error.hpp"

namespace rigidity::detail {

// Grid counts for `dims` directions; a single count is broadcast.
inline std::vector<int> expand_grid(const std::vector<int>& grid, int dims) {
    if (grid.size() == 1) return std::vector<int>(dims, grid.front());
    if (static_cast<int>(grid.size()) != dims) {
        fail(ErrorCode::BadParams, "grid has " + std::to_string(grid.size()) + " counts, expected 1 or " +
                                       std::to_string(dims));
    }
    return grid;
}

inline std::size_t grid_size(const std::vector<int>& grid) {
    std::size_t total = 1;
    for (int g : grid) total *= static_cast<std::size_t>(g);
    return total;
}

// Row-major multi-index, last direction fastest.
inline std::vector<int> unravel(std::size_t index, const std::vector<int>& grid) {
    std::vector<int> idx(grid.size());
    for (std::size_t d = grid.size(); d-- > 0;) {
        idx[d] = static_cast<int>(index % static_cast<std::size_t>(grid[d]));
        index /= static_cast<std::size_t>(grid[d]);
    }
    return idx;
}

// Midpoint of cell i when [lo, hi] is split into count cells.
inline double midpoint(double lo, double hi, int count, int i) { return lo + (hi - lo) * (i + 0.5) / count; }

}  // namespace rigidity::detail
