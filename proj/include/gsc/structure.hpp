#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsc/carpet.hpp"
#include "gsc/classify.hpp"
#include "gsc/rational.hpp"

namespace gsc {

enum class PathOrientation { vertical, horizontal, diag1, diag2 };

std::string_view to_string(PathOrientation o);

/// Black crossing paths of level k3, each a side-adjacency path of B_{k3}.
struct PathFamily {
  int level = 0;              // k3
  std::uint64_t width = 1;    // m(k3)
  std::uint64_t period = 1;   // m(k1-1): number of parent squares per side
  std::uint64_t step = 1;     // width / period, the parent square side in cells
  PathOrientation orientation = PathOrientation::vertical;
  std::vector<Path> paths;
  /// Sides joined by each path, e.g. "top-bottom", "left-top", "bottom-right".
  std::vector<std::string> connects;
  /// Built from translates of one template rather than independent searches.
  bool from_translates = false;
  /// Vertical/horizontal: path corridors are exact translates of path 0's corridor.
  /// Diagonal: every horizontal parent-step translate of a path cell is out of range
  /// or a black cell on some path of the family.
  bool periodic = false;
};

/// Vertical black paths from the top row to the bottom row, one per column of level k1-1.
/// Requires 1 < k1 < k2 <= k3, V at k1, C1 at k2 and C2 at k3 (every applied pattern).
/// The template path is searched in the set of column-0 cells whose every horizontal
/// translate by a parent step is black, so all translates are black paths as well.
PathFamily build_vertical_paths(const SequenceSpec& spec, int k1, int k2, int k3,
                                const EnumerationOptions& options = {});

/// Transpose of build_vertical_paths: left column to right column, H at k1.
PathFamily build_horizontal_paths(const SequenceSpec& spec, int k1, int k2, int k3,
                                  const EnumerationOptions& options = {});

/// Diagonal black paths for which = D1 (left-top and bottom-right paths) or D2
/// (top-right and left-bottom paths). Each path stays inside two neighbouring
/// diagonals of parent squares.
PathFamily build_diagonal_paths(const SequenceSpec& spec, int k1, int k2, int k3, PatternType which,
                                const EnumerationOptions& options = {});

/// Vertical/horizontal families: within every row (and every column) of parent squares,
/// the pieces of the paths crossing them coincide after translation.
struct SliceCheck {
  bool rows = false;
  bool columns = false;
};
SliceCheck verify_slice_translations(const PathFamily& family);

/// True when corridor(paths[a]) = corridor(paths[0]) moved by a parent steps across the
/// family's direction (x for vertical, y for horizontal families).
bool corridors_are_translates(const PathFamily& family);

/// A point with coordinates in units of 1 / (2 m(k3)).
struct HalfPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend constexpr auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
};

/// Polyline through the centres of a black path, ending at side midpoints.
struct Polyline {
  std::vector<HalfPoint> vertices;
  std::int64_t denominator = 2;  // 2 m(k3)
  Path cells;

  std::pair<Rational, Rational> vertex(std::size_t i) const {
    return {Rational(vertices[i].x, denominator), Rational(vertices[i].y, denominator)};
  }
};

struct CurveReport {
  PathOrientation orientation = PathOrientation::vertical;
  std::uint64_t period = 1;
  std::vector<Polyline> curves;
  /// Every polyline point lies in a closed black cell, none in an open white cell.
  bool avoids_white = false;
  /// Vertical/horizontal curves.
  bool translate_within_column = false;  // pieces in parent squares of one column agree
  bool translate_within_row = false;     // pieces in parent squares of one row agree
  bool curves_are_translates = false;
  bool confined_to_column = false;
  /// Diagonal curves: containment of corridors after parent-step translations.
  bool containment_x = false;
  bool containment_y = false;

  bool all_verified() const;
};

/// Separating polylines built inside the corridors of a periodic path family.
/// Vertical/horizontal: one crossing piece per parent square whose entry and exit
/// cells share a column, tiled over all parent squares; minimal by construction.
/// Throws PreconditionError when no periodic family exists.
CurveReport build_separating_curves(const SequenceSpec& spec, int k1, int k2, int k3,
                                    PathOrientation orientation, const EnumerationOptions& options = {});

}  // namespace gsc
