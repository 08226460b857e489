#pragma once

#include <cstdint>
#include <vector>

#include "gsc/carpet.hpp"

namespace oracle {

// Dense white grid of level n, built by scanning the full grid level by level.
// cell (x, y) is at index y * width + x.
struct Grid {
  std::uint64_t width = 1;
  std::vector<std::uint8_t> white;
  bool is_white(std::int64_t x, std::int64_t y) const {
    return x >= 0 && y >= 0 && x < static_cast<std::int64_t>(width) && y < static_cast<std::int64_t>(width) &&
           white[static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x)] != 0;
  }
  std::size_t white_count() const;
};

Grid white_grid(const gsc::SequenceSpec& spec, int n);

struct Extents {
  std::size_t components = 0;
  std::uint64_t worst_x = 0;  // in cells
  std::uint64_t worst_y = 0;
};

// Corner-adjacency components of the white cells by depth-first flood fill.
Extents white_extents(const Grid& g);

}  // namespace oracle
