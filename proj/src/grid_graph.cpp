#include "gsc/grid_graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

#include "gsc/errors.hpp"
#include "gsc/union_find.hpp"

namespace gsc {

std::string_view to_string(Adjacency mode) { return mode == Adjacency::corner ? "corner" : "side"; }

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::horizontal: return "horizontal";
    case EdgeKind::vertical: return "vertical";
    case EdgeKind::diag_slash: return "diag_slash";
    case EdgeKind::diag_backslash: return "diag_backslash";
  }
  return "?";
}

CellSet::CellSet(std::uint64_t resolution, std::vector<Cell> cells)
    : resolution_(resolution), cells_(std::move(cells)) {
  if (resolution_ == 0) throw PreconditionError("cell set resolution must be at least 1");
  for (const auto& c : cells_) {
    if (c.x >= resolution_ || c.y >= resolution_)
      throw PreconditionError("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                              ") outside resolution " + std::to_string(resolution_));
  }
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

CellSet CellSet::from_sorted(std::uint64_t resolution, std::vector<Cell> cells) {
  CellSet s;
  s.resolution_ = resolution;
  s.cells_ = std::move(cells);
  return s;
}

bool CellSet::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

std::optional<std::size_t> CellSet::rank_of(Cell c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

namespace {

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

struct Offset {
  int dx;
  int dy;
};

// E, W, N, S, then the diagonals.
constexpr std::array<Offset, 8> kNeighbourOrder{{
    {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1},
}};

std::optional<Cell> step(Cell c, Offset o, std::uint64_t resolution) {
  if (o.dx < 0 && c.x == 0) return std::nullopt;
  if (o.dy < 0 && c.y == 0) return std::nullopt;
  Cell n{c.x + static_cast<std::uint64_t>(static_cast<std::int64_t>(o.dx)),
         c.y + static_cast<std::uint64_t>(static_cast<std::int64_t>(o.dy))};
  if (n.x >= resolution || n.y >= resolution) return std::nullopt;
  return n;
}

}  // namespace

bool adjacent(Cell a, Cell b, Adjacency mode) {
  const auto dx = abs_diff(a.x, b.x);
  const auto dy = abs_diff(a.y, b.y);
  if (mode == Adjacency::side) return dx + dy == 1;
  return std::max(dx, dy) == 1;
}

EdgeKind edge_kind(Cell a, Cell b) {
  if (!adjacent(a, b, Adjacency::corner)) throw PreconditionError("edge_kind: cells are not adjacent");
  if (a.y == b.y) return EdgeKind::horizontal;
  if (a.x == b.x) return EdgeKind::vertical;
  // (x0 - x1)(y0 - y1) = +1 exactly when both differences share a sign.
  const bool same_sign = (a.x > b.x) == (a.y > b.y);
  return same_sign ? EdgeKind::diag_backslash : EdgeKind::diag_slash;
}

ComponentReport components(const CellSet& s, Adjacency mode) {
  const auto& cells = s.cells();
  DisjointSet sets(cells.size());

  // Only neighbours that sort after the cell; each edge is visited once.
  static constexpr std::array<Offset, 4> kCornerForward{{{0, 1}, {1, -1}, {1, 0}, {1, 1}}};
  static constexpr std::array<Offset, 2> kSideForward{{{0, 1}, {1, 0}}};
  const std::size_t n_forward = mode == Adjacency::corner ? kCornerForward.size() : kSideForward.size();
  const Offset* forward = mode == Adjacency::corner ? kCornerForward.data() : kSideForward.data();

  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t k = 0; k < n_forward; ++k) {
      auto n = step(cells[r], forward[k], s.resolution());
      if (!n) continue;
      // Neighbours in the same column sit right after r; others need a search.
      if (forward[k].dx == 0) {
        if (r + 1 < cells.size() && cells[r + 1] == *n) sets.unite(r, r + 1);
        continue;
      }
      if (auto rank = s.rank_of(*n)) sets.unite(r, *rank);
    }
  }

  ComponentReport report;
  report.mode = mode;
  std::vector<std::size_t> slot(cells.size(), SIZE_MAX);
  for (std::size_t r = 0; r < cells.size(); ++r) {
    const auto root = sets.find(r);
    if (slot[root] == SIZE_MAX) {
      slot[root] = report.components.size();
      Component comp;
      comp.box = {cells[r].x, cells[r].x, cells[r].y, cells[r].y};
      report.components.push_back(std::move(comp));
    }
    auto& comp = report.components[slot[root]];
    comp.cells.push_back(cells[r]);
    comp.box.min_x = std::min(comp.box.min_x, cells[r].x);
    comp.box.max_x = std::max(comp.box.max_x, cells[r].x);
    comp.box.min_y = std::min(comp.box.min_y, cells[r].y);
    comp.box.max_y = std::max(comp.box.max_y, cells[r].y);
  }
  return report;
}

std::optional<Path> crossing_path(const CellSet& s, Adjacency mode, const CellPredicate& from,
                                  const CellPredicate& to, const CellPredicate& restrict) {
  const auto& cells = s.cells();
  const std::size_t n = cells.size();
  std::vector<std::uint8_t> allowed(n, 1);
  if (restrict) {
    for (std::size_t r = 0; r < n; ++r) allowed[r] = restrict(cells[r]) ? 1 : 0;
  }

  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> prev(n, kNone);
  std::vector<std::uint8_t> seen(n, 0);
  std::deque<std::size_t> queue;

  auto unwind = [&](std::size_t r) {
    Path path;
    for (std::size_t cur = r; cur != kNone; cur = prev[cur]) path.push_back(cells[cur]);
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (std::size_t r = 0; r < n; ++r) {
    if (!allowed[r] || !from(cells[r])) continue;
    if (to(cells[r])) return Path{cells[r]};
    seen[r] = 1;
    queue.push_back(r);
  }

  const std::size_t n_dirs = mode == Adjacency::corner ? 8 : 4;
  while (!queue.empty()) {
    const auto r = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < n_dirs; ++k) {
      auto nb = step(cells[r], kNeighbourOrder[k], s.resolution());
      if (!nb) continue;
      auto rank = s.rank_of(*nb);
      if (!rank || seen[*rank] || !allowed[*rank]) continue;
      seen[*rank] = 1;
      prev[*rank] = r;
      if (to(*nb)) return unwind(*rank);
      queue.push_back(*rank);
    }
  }
  return std::nullopt;
}

CellSet corridor(const Path& p, std::uint64_t resolution) { return CellSet(resolution, p); }

bool is_path_in(const Path& p, const CellSet& s, Adjacency mode) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!s.contains(p[k])) return false;
    if (k > 0 && !adjacent(p[k - 1], p[k], mode)) return false;
  }
  std::vector<Cell> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace gsc
