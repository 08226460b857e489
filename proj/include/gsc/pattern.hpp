#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gsc {

/// A square of a pattern grid: i is the column, j the row (rows grow upward).
struct PatternCell {
  int i = 0;
  int j = 0;
  friend constexpr auto operator<=>(const PatternCell&, const PatternCell&) = default;
};

/// An m x m pattern: the cells kept white at one construction step.
///
/// Invariants: m >= 2 and at least one white cell. Immutable once built.
class Pattern {
 public:
  /// Throws PreconditionError when m < 2, a cell is out of range, or no cell is white.
  Pattern(int m, const std::vector<PatternCell>& white);

  int m() const { return m_; }
  bool is_white(int i, int j) const { return white_[index(i, j)] != 0; }
  bool is_black(int i, int j) const { return !is_white(i, j); }

  /// White cells sorted by (i, j).
  std::vector<PatternCell> white_cells() const;
  std::size_t white_count() const { return white_count_; }

  /// Builds a pattern from the positions that should be black.
  static Pattern from_black(int m, const std::vector<PatternCell>& black);

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * m_ + i; }

  int m_;
  std::vector<std::uint8_t> white_;
  std::size_t white_count_ = 0;
};

/// The black cells S_m minus white, sorted by (i, j).
std::vector<PatternCell> complement(const Pattern& p);

/// Parses m lines of m characters; '.' is white, '#' is black, first line is the top row.
/// A single trailing newline is accepted. Throws ParseError.
Pattern parse_pattern(std::string_view text);

/// Inverse of parse_pattern, rows joined by '\n' without a trailing newline.
std::string serialize_pattern(const Pattern& p);

/// Mirror images and rotations used by the symmetry checks.
Pattern mirror_horizontal(const Pattern& p);  // i -> m-1-i
Pattern mirror_vertical(const Pattern& p);    // j -> m-1-j
Pattern rotate_180(const Pattern& p);
Pattern transpose(const Pattern& p);          // (i, j) -> (j, i)

namespace patterns {

/// All-white m x m pattern.
Pattern all_white(int m);
/// Single black center cell; the classic carpet generator when m = 3.
Pattern classic(int m = 3);
/// Column 0 black.
Pattern left_column_black(int m);
/// Row 0 black.
Pattern bottom_row_black(int m);
/// Black superdiagonal {(i, i+1)} plus the bottom-right corner (m-1, 0).
Pattern superdiagonal_plus_corner(int m);

}  // namespace patterns

}  // namespace gsc
