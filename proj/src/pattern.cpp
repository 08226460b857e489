#include "gsc/pattern.hpp"

#include <algorithm>

#include "gsc/errors.hpp"

namespace gsc {

Pattern::Pattern(int m, const std::vector<PatternCell>& white) : m_(m) {
  if (m < 2) throw PreconditionError("pattern side must be at least 2, got " + std::to_string(m));
  white_.assign(static_cast<std::size_t>(m) * m, 0);
  for (const auto& c : white) {
    if (c.i < 0 || c.i >= m || c.j < 0 || c.j >= m) {
      throw PreconditionError("pattern cell (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                              ") outside a " + std::to_string(m) + "x" + std::to_string(m) + " grid");
    }
    auto& slot = white_[index(c.i, c.j)];
    if (!slot) ++white_count_;
    slot = 1;
  }
  if (white_count_ == 0) throw PreconditionError("pattern has no white cell");
}

std::vector<PatternCell> Pattern::white_cells() const {
  std::vector<PatternCell> out;
  out.reserve(white_count_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      if (is_white(i, j)) out.push_back({i, j});
  return out;
}

Pattern Pattern::from_black(int m, const std::vector<PatternCell>& black) {
  if (m < 2) throw PreconditionError("pattern side must be at least 2, got " + std::to_string(m));
  std::vector<std::uint8_t> is_black(static_cast<std::size_t>(m) * m, 0);
  for (const auto& c : black) {
    if (c.i < 0 || c.i >= m || c.j < 0 || c.j >= m)
      throw PreconditionError("black cell outside the pattern grid");
    is_black[static_cast<std::size_t>(c.j) * m + c.i] = 1;
  }
  std::vector<PatternCell> white;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!is_black[static_cast<std::size_t>(j) * m + i]) white.push_back({i, j});
  return Pattern(m, white);
}

std::vector<PatternCell> complement(const Pattern& p) {
  std::vector<PatternCell> out;
  for (int i = 0; i < p.m(); ++i)
    for (int j = 0; j < p.m(); ++j)
      if (p.is_black(i, j)) out.push_back({i, j});
  return out;
}

Pattern parse_pattern(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    const auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  const int m = static_cast<int>(lines.size());
  for (const auto& line : lines) {
    for (char ch : line) {
      if (ch != '.' && ch != '#') {
        throw ParseError(ParseError::Kind::illegal_character,
                         std::string("illegal pattern character '") + ch + "'");
      }
    }
    if (static_cast<int>(line.size()) != m) {
      throw ParseError(ParseError::Kind::ragged_lines,
                       "pattern needs " + std::to_string(m) + " lines of " + std::to_string(m) +
                           " characters; found a line of length " + std::to_string(line.size()));
    }
  }
  if (m < 2) throw ParseError(ParseError::Kind::too_small, "pattern side must be at least 2");

  std::vector<PatternCell> white;
  for (int row = 0; row < m; ++row) {
    const int j = m - 1 - row;
    for (int i = 0; i < m; ++i)
      if (lines[row][i] == '.') white.push_back({i, j});
  }
  if (white.empty()) throw ParseError(ParseError::Kind::empty_white, "pattern has no white cell");
  return Pattern(m, white);
}

std::string serialize_pattern(const Pattern& p) {
  const int m = p.m();
  std::string out;
  out.reserve(static_cast<std::size_t>(m) * (m + 1));
  for (int j = m - 1; j >= 0; --j) {
    for (int i = 0; i < m; ++i) out.push_back(p.is_white(i, j) ? '.' : '#');
    if (j > 0) out.push_back('\n');
  }
  return out;
}

namespace {

template <typename Map>
Pattern remap(const Pattern& p, Map map) {
  std::vector<PatternCell> white;
  for (const auto& c : p.white_cells()) white.push_back(map(c));
  return Pattern(p.m(), white);
}

}  // namespace

Pattern mirror_horizontal(const Pattern& p) {
  return remap(p, [m = p.m()](PatternCell c) { return PatternCell{m - 1 - c.i, c.j}; });
}

Pattern mirror_vertical(const Pattern& p) {
  return remap(p, [m = p.m()](PatternCell c) { return PatternCell{c.i, m - 1 - c.j}; });
}

Pattern rotate_180(const Pattern& p) {
  return remap(p, [m = p.m()](PatternCell c) { return PatternCell{m - 1 - c.i, m - 1 - c.j}; });
}

Pattern transpose(const Pattern& p) {
  return remap(p, [](PatternCell c) { return PatternCell{c.j, c.i}; });
}

namespace patterns {

Pattern all_white(int m) { return Pattern::from_black(m, {}); }

Pattern classic(int m) { return Pattern::from_black(m, {{m / 2, m / 2}}); }

Pattern left_column_black(int m) {
  std::vector<PatternCell> black;
  for (int j = 0; j < m; ++j) black.push_back({0, j});
  return Pattern::from_black(m, black);
}

Pattern bottom_row_black(int m) {
  std::vector<PatternCell> black;
  for (int i = 0; i < m; ++i) black.push_back({i, 0});
  return Pattern::from_black(m, black);
}

Pattern superdiagonal_plus_corner(int m) {
  std::vector<PatternCell> black;
  for (int i = 0; i + 1 < m; ++i) black.push_back({i, i + 1});
  black.push_back({m - 1, 0});
  return Pattern::from_black(m, black);
}

}  // namespace patterns

}  // namespace gsc
