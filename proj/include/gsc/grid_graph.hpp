#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace gsc {

/// Largest grid resolution any enumerating operation accepts.
inline constexpr std::uint64_t kMaxEnumerableWidth = std::uint64_t{1} << 62;

/// A square of the level-n grid; x is the column, y the row (rows grow upward).
struct Cell {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Corner mode joins squares with nonempty intersection; side mode needs a common side.
enum class Adjacency { corner, side };

enum class EdgeKind { horizontal, vertical, diag_slash, diag_backslash };

std::string_view to_string(Adjacency mode);
std::string_view to_string(EdgeKind kind);

struct BoundingBox {
  std::uint64_t min_x = 0;
  std::uint64_t max_x = 0;
  std::uint64_t min_y = 0;
  std::uint64_t max_y = 0;

  std::uint64_t width() const { return max_x - min_x + 1; }
  std::uint64_t height() const { return max_y - min_y + 1; }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// A set of cells of one M x M grid, stored sorted by (x, y) without duplicates.
class CellSet {
 public:
  CellSet() = default;
  /// Sorts and deduplicates; throws PreconditionError if a cell is outside [0, M)^2.
  CellSet(std::uint64_t resolution, std::vector<Cell> cells);

  /// Trusted constructor for cells that are already sorted, unique and in range.
  static CellSet from_sorted(std::uint64_t resolution, std::vector<Cell> cells);

  std::uint64_t resolution() const { return resolution_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  bool contains(Cell c) const;
  /// Rank of c in the sorted list, if present.
  std::optional<std::size_t> rank_of(Cell c) const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::uint64_t resolution_ = 1;
  std::vector<Cell> cells_;
};

bool adjacent(Cell a, Cell b, Adjacency mode);

/// Kind of the edge between two corner-adjacent cells; throws PreconditionError otherwise.
EdgeKind edge_kind(Cell a, Cell b);

struct Component {
  std::vector<Cell> cells;  // sorted
  BoundingBox box;
};

struct ComponentReport {
  Adjacency mode = Adjacency::corner;
  std::vector<Component> components;  // ordered by smallest cell
};

ComponentReport components(const CellSet& s, Adjacency mode);

using CellPredicate = std::function<bool(Cell)>;
using Path = std::vector<Cell>;

/// Breadth-first shortest path inside s (and `restrict`, when given) from any cell
/// satisfying `from` to any cell satisfying `to`. Sources are seeded in sorted order
/// and neighbours are expanded E, W, N, S, NE, NW, SE, SW, so the result is
/// deterministic. A shortest path is minimal: no proper subsequence is a path.
std::optional<Path> crossing_path(const CellSet& s, Adjacency mode, const CellPredicate& from,
                                  const CellPredicate& to, const CellPredicate& restrict = {});

/// The cells of a path as a set.
CellSet corridor(const Path& p, std::uint64_t resolution);

/// True when p is a path of s: consecutive cells adjacent in `mode`, no repeats, all in s.
bool is_path_in(const Path& p, const CellSet& s, Adjacency mode);

}  // namespace gsc
