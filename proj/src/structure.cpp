#include "gsc/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gsc/errors.hpp"

namespace gsc {

std::string_view to_string(PathOrientation o) {
  switch (o) {
    case PathOrientation::vertical: return "vertical";
    case PathOrientation::horizontal: return "horizontal";
    case PathOrientation::diag1: return "diag1";
    case PathOrientation::diag2: return "diag2";
  }
  return "?";
}

bool CurveReport::all_verified() const {
  if (orientation == PathOrientation::diag1 || orientation == PathOrientation::diag2)
    return avoids_white && containment_x && containment_y;
  return avoids_white && translate_within_column && translate_within_row && curves_are_translates &&
         confined_to_column;
}

namespace {

// Signed cell coordinates; translates may leave the grid.
struct ICell {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend constexpr auto operator<=>(const ICell&, const ICell&) = default;
};

using IPath = std::vector<ICell>;

ICell to_icell(Cell c) { return {static_cast<std::int64_t>(c.x), static_cast<std::int64_t>(c.y)}; }
Cell to_cell(ICell c) { return {static_cast<std::uint64_t>(c.x), static_cast<std::uint64_t>(c.y)}; }

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

// Every construction below works in a frame where the family is vertical or D1;
// the other orientations are reached by an involution of the grid.
enum class Frame { identity, transpose, mirror_x };

ICell reframe(ICell c, Frame f, std::int64_t width) {
  switch (f) {
    case Frame::identity: return c;
    case Frame::transpose: return {c.y, c.x};
    case Frame::mirror_x: return {width - 1 - c.x, c.y};
  }
  return c;
}

HalfPoint reframe(HalfPoint p, Frame f, std::int64_t width) {
  switch (f) {
    case Frame::identity: return p;
    case Frame::transpose: return {p.y, p.x};
    case Frame::mirror_x: return {2 * width - p.x, p.y};
  }
  return p;
}

class FramedBlack {
 public:
  FramedBlack(const LevelSets& sets, Frame frame)
      : sets_(sets), frame_(frame), width_(static_cast<std::int64_t>(sets.width())) {}

  bool operator()(ICell c) const {
    if (c.x < 0 || c.y < 0 || c.x >= width_ || c.y >= width_) return false;
    return sets_.is_black(to_cell(reframe(c, frame_, width_)));
  }
  std::int64_t width() const { return width_; }

 private:
  const LevelSets& sets_;
  Frame frame_;
  std::int64_t width_;
};

struct Geometry {
  std::int64_t period = 1;  // parent squares per side
  std::int64_t width = 1;
  std::int64_t step = 1;    // parent square side in cells
};

Geometry geometry(const SequenceSpec& spec, int k1, int k3) {
  Geometry g;
  g.period = static_cast<std::int64_t>(level_width_checked(spec, k1 - 1));
  g.width = static_cast<std::int64_t>(level_width_checked(spec, k3));
  g.step = g.width / g.period;
  return g;
}

std::string types_string(const TypeSet& t) {
  std::string s = "{";
  for (auto type : kAllTypes) {
    if (!t.has(type)) continue;
    if (s.size() > 1) s += ",";
    s += to_string(type);
  }
  return s + "}";
}

void require_all(const SequenceSpec& spec, int k, PatternType type) {
  const auto ls = level_pattern(spec, k);
  const auto applied = ls.applied();
  for (std::size_t i = 0; i < applied.size(); ++i) {
    const auto t = types_of(*applied[i]);
    if (!t.has(type))
      throw PreconditionError("level " + std::to_string(k) + ": pattern " + std::to_string(i) + " is not of type " +
                              std::string(to_string(type)) + " (classified as " + types_string(t) + ")");
  }
}

void check_hypotheses(const SequenceSpec& spec, int k1, int k2, int k3, PatternType cutting) {
  if (!(1 < k1 && k1 < k2 && k2 <= k3))
    throw PreconditionError("indices must satisfy 1 < k1 < k2 <= k3, got k1=" + std::to_string(k1) +
                            " k2=" + std::to_string(k2) + " k3=" + std::to_string(k3));
  require_all(spec, k1, cutting);
  require_all(spec, k2, PatternType::C1);
  require_all(spec, k3, PatternType::C2);
}

CellSet to_cellset(const std::vector<ICell>& cells, std::int64_t width) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(to_cell(c));
  return CellSet(static_cast<std::uint64_t>(width), std::move(out));
}

IPath translate(const IPath& p, std::int64_t dx, std::int64_t dy) {
  IPath out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back({c.x + dx, c.y + dy});
  return out;
}

IPath to_ipath(const Path& p) {
  IPath out;
  for (const auto& c : p) out.push_back(to_icell(c));
  return out;
}

Path to_path(const IPath& p, Frame f, std::int64_t width) {
  Path out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(to_cell(reframe(c, f, width)));
  return out;
}

// ---------------------------------------------------------------------------
// Vertical families (horizontal ones through the transpose frame).

std::vector<IPath> vertical_paths_in_frame(const FramedBlack& black, const Geometry& g, bool& from_translates) {
  std::vector<ICell> band;
  for (std::int64_t x = 0; x < g.step; ++x) {
    for (std::int64_t y = 0; y < g.width; ++y) {
      bool all = true;
      for (std::int64_t a = 0; a < g.period && all; ++a) all = black({x + a * g.step, y});
      if (all) band.push_back({x, y});
    }
  }
  const auto top = [&](Cell c) { return static_cast<std::int64_t>(c.y) == g.width - 1; };
  const auto bottom = [](Cell c) { return c.y == 0; };

  std::vector<IPath> paths;
  if (auto tmpl = crossing_path(to_cellset(band, g.width), Adjacency::side, top, bottom)) {
    from_translates = true;
    const auto base = to_ipath(*tmpl);
    for (std::int64_t a = 0; a < g.period; ++a) paths.push_back(translate(base, a * g.step, 0));
    return paths;
  }

  from_translates = false;
  for (std::int64_t a = 0; a < g.period; ++a) {
    std::vector<ICell> cells;
    for (std::int64_t x = a * g.step; x < (a + 1) * g.step; ++x)
      for (std::int64_t y = 0; y < g.width; ++y)
        if (black({x, y})) cells.push_back({x, y});
    auto p = crossing_path(to_cellset(cells, g.width), Adjacency::side, top, bottom);
    if (!p)
      throw Error("no black top-bottom path inside column " + std::to_string(a) +
                  " of level k1-1; the hypotheses should rule this out");
    paths.push_back(to_ipath(*p));
  }
  return paths;
}

PathFamily axis_family(const SequenceSpec& spec, int k1, int k2, int k3, bool horizontal,
                       const EnumerationOptions& options) {
  check_hypotheses(spec, k1, k2, k3, horizontal ? PatternType::H : PatternType::V);
  const auto g = geometry(spec, k1, k3);
  const auto sets = materialize(spec, k3, options);
  const Frame frame = horizontal ? Frame::transpose : Frame::identity;
  const FramedBlack black(sets, frame);

  PathFamily family;
  family.level = k3;
  family.width = static_cast<std::uint64_t>(g.width);
  family.period = static_cast<std::uint64_t>(g.period);
  family.step = static_cast<std::uint64_t>(g.step);
  family.orientation = horizontal ? PathOrientation::horizontal : PathOrientation::vertical;

  for (auto& p : vertical_paths_in_frame(black, g, family.from_translates)) {
    auto path = to_path(p, frame, g.width);
    if (horizontal) std::reverse(path.begin(), path.end());
    family.paths.push_back(std::move(path));
    family.connects.push_back(horizontal ? "left-right" : "top-bottom");
  }
  family.periodic = corridors_are_translates(family);
  return family;
}

// ---------------------------------------------------------------------------
// Diagonal families (D2 through the mirror frame).

// Offsets inside a parent square that are black in every parent square.
class PeriodicCore {
 public:
  PeriodicCore(const FramedBlack& black, const Geometry& g) : step_(g.step), in_(g.step * g.step, 0) {
    for (std::int64_t ox = 0; ox < g.step; ++ox) {
      for (std::int64_t oy = 0; oy < g.step; ++oy) {
        bool all = true;
        for (std::int64_t a = 0; a < g.period && all; ++a)
          for (std::int64_t b = 0; b < g.period && all; ++b) all = black({a * g.step + ox, b * g.step + oy});
        in_[ox * step_ + oy] = all ? 1 : 0;
      }
    }
  }

  bool contains(ICell c) const { return in_[floor_mod(c.x, step_) * step_ + floor_mod(c.y, step_)] != 0; }

 private:
  std::int64_t step_;
  std::vector<std::uint8_t> in_;
};

// Shortest side-adjacency walk in the periodic core from `start` to start + (w, w) whose
// other cells stay in `region`; cells of the target square other than the target are excluded,
// so consecutive translates of the walk share only their joining cell.
std::optional<IPath> generator_from(const PeriodicCore& core, ICell start, std::int64_t w, ICell region_lo,
                                    ICell region_hi) {
  const ICell target{start.x + w, start.y + w};
  const auto rw = region_hi.x - region_lo.x;
  const auto rh = region_hi.y - region_lo.y;
  auto inside = [&](ICell c) {
    return c.x >= region_lo.x && c.x < region_hi.x && c.y >= region_lo.y && c.y < region_hi.y;
  };
  auto index = [&](ICell c) { return static_cast<std::size_t>((c.x - region_lo.x) * rh + (c.y - region_lo.y)); };

  std::vector<std::int64_t> prev(static_cast<std::size_t>(rw * rh), -2);
  std::deque<ICell> queue{start};
  prev[index(start)] = -1;
  static constexpr ICell kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (const auto& d : kSteps) {
      const ICell n{c.x + d.x, c.y + d.y};
      if (n == target) {
        IPath path{target};
        for (std::int64_t cur = static_cast<std::int64_t>(index(c)); cur != -1; cur = prev[cur])
          path.push_back({region_lo.x + cur / rh, region_lo.y + cur % rh});
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!inside(n) || !core.contains(n) || prev[index(n)] != -2) continue;
      prev[index(n)] = static_cast<std::int64_t>(index(c));
      queue.push_back(n);
    }
  }
  return std::nullopt;
}

std::optional<IPath> find_diagonal_generator(const PeriodicCore& core, std::int64_t w) {
  // Upper band: parent squares (0,0), (0,1); lower band: (0,0), (1,0).
  const std::pair<ICell, ICell> regions[2] = {{{0, 0}, {w, 2 * w}}, {{0, 0}, {2 * w, w}}};
  for (const auto& [lo, hi] : regions) {
    std::optional<IPath> best;
    for (std::int64_t x = 0; x < w; ++x) {
      for (std::int64_t y = 0; y < w; ++y) {
        if (!core.contains({x, y})) continue;
        auto g = generator_from(core, {x, y}, w, lo, hi);
        if (g && (!best || g->size() < best->size())) best = std::move(g);
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

struct DiagonalPaths {
  std::vector<IPath> left_top;
  std::vector<IPath> bottom_right;
  bool from_translates = false;
};

DiagonalPaths diagonal_paths_in_frame(const FramedBlack& black, const Geometry& g) {
  DiagonalPaths out;
  const auto w = g.step;
  const auto n = g.width;
  const PeriodicCore core(black, g);
  auto in_range = [&](ICell c) { return c.x >= 0 && c.y >= 0 && c.x < n && c.y < n; };

  if (auto gen = find_diagonal_generator(core, w)) {
    out.from_translates = true;
    const auto period = g.period;
    for (std::int64_t shift = -period - 1; shift <= period + 1; ++shift) {
      // The chain: translates of the generator by (k w, k w), moved right by `shift` squares.
      std::vector<IPath> runs(1);
      for (std::int64_t k = -period - 2; k <= period + 2; ++k) {
        for (std::size_t i = 0; i + 1 < gen->size(); ++i) {
          const ICell c{(*gen)[i].x + (k + shift) * w, (*gen)[i].y + k * w};
          if (in_range(c)) {
            runs.back().push_back(c);
          } else if (!runs.back().empty()) {
            runs.emplace_back();
          }
        }
      }
      for (auto& run : runs) {
        if (run.empty()) continue;
        if (run.front().x == 0 && run.back().y == n - 1) {
          out.left_top.push_back(std::move(run));
        } else if (run.front().y == 0 && run.back().x == n - 1) {
          out.bottom_right.push_back(std::move(run));
        }
      }
    }
  } else {
    out.from_translates = false;
    auto square = [&](ICell c) { return ICell{c.x / w, c.y / w}; };
    for (std::int64_t t = 0; t < g.period; ++t) {
      std::vector<ICell> lt, br;
      for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t y = 0; y < n; ++y) {
          if (!black({x, y})) continue;
          const auto q = square({x, y});
          if (q.y - q.x == t || q.y - q.x == t + 1) lt.push_back({x, y});
          if (q.x - q.y == t || q.x - q.y == t + 1) br.push_back({x, y});
        }
      }
      auto p = crossing_path(to_cellset(lt, n), Adjacency::side, [](Cell c) { return c.x == 0; },
                             [&](Cell c) { return static_cast<std::int64_t>(c.y) == n - 1; });
      auto q = crossing_path(to_cellset(br, n), Adjacency::side, [](Cell c) { return c.y == 0; },
                             [&](Cell c) { return static_cast<std::int64_t>(c.x) == n - 1; });
      if (!p || !q)
        throw Error("no black diagonal path inside diagonal block " + std::to_string(t) +
                    " of level k1-1; reported as a finding");
      out.left_top.push_back(to_ipath(*p));
      out.bottom_right.push_back(to_ipath(*q));
    }
  }

  std::sort(out.left_top.begin(), out.left_top.end(),
            [](const IPath& a, const IPath& b) { return a.front().y < b.front().y; });
  std::sort(out.bottom_right.begin(), out.bottom_right.end(),
            [](const IPath& a, const IPath& b) { return a.front().x < b.front().x; });
  return out;
}

// Every horizontal parent-step translate of a path cell is off the grid, or black and on a path.
bool diagonal_translation_holds(const DiagonalPaths& d, const FramedBlack& black, const Geometry& g) {
  std::set<ICell> on_paths;
  for (const auto* group : {&d.left_top, &d.bottom_right})
    for (const auto& p : *group) on_paths.insert(p.begin(), p.end());
  for (const auto& c : on_paths) {
    for (std::int64_t a = -(g.period - 1); a <= g.period - 1; ++a) {
      if (a == 0) continue;
      const ICell t{c.x + a * g.step, c.y};
      if (t.x < 0 || t.x >= g.width) continue;
      if (!black(t) || !on_paths.contains(t)) return false;
    }
  }
  return true;
}

struct DiagonalSetup {
  Geometry g;
  Frame frame;
  const char* first_label;
  const char* second_label;
};

DiagonalSetup diagonal_setup(const SequenceSpec& spec, int k1, int k3, PatternType which) {
  if (which == PatternType::D1) return {geometry(spec, k1, k3), Frame::identity, "left-top", "bottom-right"};
  return {geometry(spec, k1, k3), Frame::mirror_x, "right-top", "bottom-left"};
}

// ---------------------------------------------------------------------------
// Polylines and their exact checks, all in half-cell units.

using Segment = std::pair<HalfPoint, HalfPoint>;  // unit length, endpoints ordered

HalfPoint centre(ICell c) { return {2 * c.x + 1, 2 * c.y + 1}; }

std::vector<Segment> unit_segments(const std::vector<HalfPoint>& v) {
  std::vector<Segment> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const auto dx = v[i + 1].x - v[i].x;
    const auto dy = v[i + 1].y - v[i].y;
    const auto len = std::max(std::abs(dx), std::abs(dy));
    const HalfPoint dir{dx == 0 ? 0 : dx / std::abs(dx), dy == 0 ? 0 : dy / std::abs(dy)};
    HalfPoint cur = v[i];
    for (std::int64_t s = 0; s < len; ++s) {
      HalfPoint next{cur.x + dir.x, cur.y + dir.y};
      out.push_back(cur < next ? Segment{cur, next} : Segment{next, cur});
      cur = next;
    }
  }
  return out;
}

struct Box {
  std::int64_t x0, x1, y0, y1;  // closed, half units
  bool contains(HalfPoint p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

// The intersection of a polyline with a closed box: whole unit segments plus isolated points.
struct Slice {
  std::vector<Segment> segments;
  std::vector<HalfPoint> points;
  bool empty() const { return segments.empty() && points.empty(); }
  friend bool operator==(const Slice&, const Slice&) = default;
};

Slice slice_of(const std::vector<Segment>& segs, const Box& box) {
  Slice s;
  std::set<HalfPoint> covered, touching;
  for (const auto& [a, b] : segs) {
    const bool ia = box.contains(a), ib = box.contains(b);
    if (ia && ib) {
      s.segments.push_back({a, b});
      covered.insert(a);
      covered.insert(b);
    } else if (ia) {
      touching.insert(a);
    } else if (ib) {
      touching.insert(b);
    }
  }
  for (const auto& p : touching)
    if (!covered.contains(p)) s.points.push_back(p);
  std::sort(s.segments.begin(), s.segments.end());
  s.segments.erase(std::unique(s.segments.begin(), s.segments.end()), s.segments.end());
  return s;
}

Slice shifted(const Slice& s, std::int64_t dx, std::int64_t dy) {
  Slice out;
  for (const auto& [a, b] : s.segments) out.segments.push_back({{a.x + dx, a.y + dy}, {b.x + dx, b.y + dy}});
  for (const auto& p : s.points) out.points.push_back({p.x + dx, p.y + dy});
  return out;
}

Box parent_box(std::int64_t a, std::int64_t b, std::int64_t step) {
  return {2 * a * step, 2 * (a + 1) * step, 2 * b * step, 2 * (b + 1) * step};
}

// Consecutive cells side-adjacent and black; vertices, segment midpoints never inside a white cell.
bool polyline_avoids_white(const std::vector<HalfPoint>& v, const IPath& cells, const FramedBlack& black) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!black(cells[i])) return false;
    if (i > 0 && std::abs(cells[i].x - cells[i - 1].x) + std::abs(cells[i].y - cells[i - 1].y) != 1) return false;
  }
  auto check = [&](std::int64_t qx, std::int64_t qy) {  // quarter-cell units
    if (qx % 4 == 0 || qy % 4 == 0) return true;          // on a grid line: in no open cell
    return black({qx / 4, qy / 4});
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!check(2 * v[i].x, 2 * v[i].y)) return false;
    if (i + 1 < v.size() && !check(v[i].x + v[i + 1].x, v[i].y + v[i + 1].y)) return false;
  }
  return true;
}

// Crossing piece in one parent square: from (x, step-1) to (x, 0) through interior rows only.
std::optional<IPath> find_crossing_piece(const PeriodicCore& core, std::int64_t step) {
  std::optional<IPath> best;
  for (std::int64_t x = 0; x < step; ++x) {
    if (!core.contains({x, step - 1}) || !core.contains({x, 0})) continue;
    if (step == 2) return IPath{{x, 1}, {x, 0}};
    std::vector<ICell> cells{{x, step - 1}, {x, 0}};
    for (std::int64_t cx = 0; cx < step; ++cx)
      for (std::int64_t cy = 1; cy + 1 < step; ++cy)
        if (core.contains({cx, cy})) cells.push_back({cx, cy});
    auto p = crossing_path(to_cellset(cells, step), Adjacency::side,
                           [&](Cell c) { return c.x == static_cast<std::uint64_t>(x) &&
                                                c.y == static_cast<std::uint64_t>(step - 1); },
                           [&](Cell c) { return c.x == static_cast<std::uint64_t>(x) && c.y == 0; });
    if (p && (!best || p->size() < best->size())) best = to_ipath(*p);
  }
  return best;
}

CurveReport axis_curves(const SequenceSpec& spec, int k1, int k2, int k3, bool horizontal,
                        const EnumerationOptions& options) {
  const auto family = axis_family(spec, k1, k2, k3, horizontal, options);
  if (!family.periodic)
    throw PreconditionError("no periodic path family at these indices; separating curves need one");
  const auto g = geometry(spec, k1, k3);
  const auto sets = materialize(spec, k3, options);
  const Frame frame = horizontal ? Frame::transpose : Frame::identity;
  const FramedBlack black(sets, frame);
  const PeriodicCore core(black, g);

  const auto piece = find_crossing_piece(core, g.step);
  if (!piece) throw Error("no crossing piece with entry and exit in one column of a parent square");

  CurveReport report;
  report.orientation = family.orientation;
  report.period = static_cast<std::uint64_t>(g.period);

  std::vector<IPath> paths;
  std::vector<std::vector<HalfPoint>> polylines;
  for (std::int64_t a = 0; a < g.period; ++a) {
    IPath cells;
    for (std::int64_t b = g.period - 1; b >= 0; --b) {
      const auto part = translate(*piece, a * g.step, b * g.step);
      cells.insert(cells.end(), part.begin(), part.end());
    }
    std::vector<HalfPoint> v;
    v.push_back({2 * cells.front().x + 1, 2 * cells.front().y + 2});
    for (const auto& c : cells) v.push_back(centre(c));
    v.push_back({2 * cells.back().x + 1, 2 * cells.back().y});
    paths.push_back(std::move(cells));
    polylines.push_back(std::move(v));
  }

  report.avoids_white = true;
  for (std::size_t i = 0; i < paths.size(); ++i)
    report.avoids_white = report.avoids_white && polyline_avoids_white(polylines[i], paths[i], black);

  report.curves_are_translates = true;
  for (std::size_t a = 0; a < polylines.size(); ++a) {
    const auto dx = 2 * static_cast<std::int64_t>(a) * g.step;
    for (std::size_t i = 0; i < polylines[a].size(); ++i)
      if (polylines[a][i] != HalfPoint{polylines[0][i].x + dx, polylines[0][i].y})
        report.curves_are_translates = false;
  }

  report.confined_to_column = true;
  for (const auto& v : polylines) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end(),
                                              [](const HalfPoint& p, const HalfPoint& q) { return p.x < q.x; });
    const auto band = lo->x / (2 * g.step);
    if (hi->x > 2 * (band + 1) * g.step) report.confined_to_column = false;
  }

  // Slices per parent square, compared against the first non-empty slice of the same column / row.
  report.translate_within_column = true;
  report.translate_within_row = true;
  std::map<std::int64_t, std::pair<ICell, Slice>> row_reference;
  for (const auto& v : polylines) {
    const auto segs = unit_segments(v);
    std::optional<std::pair<ICell, Slice>> column_reference;
    for (std::int64_t a = 0; a < g.period; ++a) {
      for (std::int64_t b = 0; b < g.period; ++b) {
        const auto s = slice_of(segs, parent_box(a, b, g.step));
        if (s.empty()) continue;
        if (!column_reference || column_reference->first.x != a) {
          if (column_reference && column_reference->first.x != a) report.translate_within_column = false;
          column_reference = {{a, b}, s};
        } else if (shifted(column_reference->second, 0, 2 * (b - column_reference->first.y) * g.step) != s) {
          report.translate_within_column = false;
        }
        auto it = row_reference.find(b);
        if (it == row_reference.end()) {
          row_reference.emplace(b, std::pair{ICell{a, b}, s});
        } else if (shifted(it->second.second, 2 * (a - it->second.first.x) * g.step, 0) != s) {
          report.translate_within_row = false;
        }
      }
    }
  }

  for (std::size_t i = 0; i < paths.size(); ++i) {
    Polyline pl;
    pl.denominator = 2 * g.width;
    pl.cells = to_path(paths[i], frame, g.width);
    for (const auto& p : polylines[i]) pl.vertices.push_back(reframe(p, frame, g.width));
    if (horizontal) {
      std::reverse(pl.cells.begin(), pl.cells.end());
      std::reverse(pl.vertices.begin(), pl.vertices.end());
    }
    report.curves.push_back(std::move(pl));
  }
  return report;
}

// Within one group, for every pair some parent-step translate along `axis` nests the corridors.
bool corridors_nest(const std::vector<IPath>& group, const Geometry& g, bool along_x) {
  std::vector<std::set<ICell>> corr;
  for (const auto& p : group) corr.emplace_back(p.begin(), p.end());
  auto subset = [](const std::set<ICell>& small, const std::set<ICell>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (std::size_t i = 0; i < corr.size(); ++i) {
    for (std::size_t j = 0; j < corr.size(); ++j) {
      if (i == j) continue;
      bool found = false;
      for (std::int64_t a = -(g.period - 1); a <= g.period - 1 && !found; ++a) {
        std::set<ICell> moved;
        for (const auto& c : corr[i])
          moved.insert(along_x ? ICell{c.x + a * g.step, c.y} : ICell{c.x, c.y + a * g.step});
        found = subset(corr[j], moved) || subset(moved, corr[j]);
      }
      if (!found) return false;
    }
  }
  return true;
}

CurveReport diagonal_curves(const SequenceSpec& spec, int k1, int k2, int k3, PatternType which,
                            const EnumerationOptions& options) {
  check_hypotheses(spec, k1, k2, k3, which);
  const auto setup = diagonal_setup(spec, k1, k3, which);
  const auto& g = setup.g;
  const auto sets = materialize(spec, k3, options);
  const FramedBlack black(sets, setup.frame);
  const auto paths = diagonal_paths_in_frame(black, g);
  if (!diagonal_translation_holds(paths, black, g))
    throw PreconditionError("no periodic diagonal path family at these indices; separating curves need one");

  CurveReport report;
  report.orientation = which == PatternType::D1 ? PathOrientation::diag1 : PathOrientation::diag2;
  report.period = static_cast<std::uint64_t>(g.period);
  report.avoids_white = true;

  auto emit = [&](const IPath& cells, bool left_top) {
    std::vector<HalfPoint> v;
    const auto& f = cells.front();
    const auto& l = cells.back();
    v.push_back(left_top ? HalfPoint{2 * f.x, 2 * f.y + 1} : HalfPoint{2 * f.x + 1, 2 * f.y});
    for (const auto& c : cells) v.push_back(centre(c));
    v.push_back(left_top ? HalfPoint{2 * l.x + 1, 2 * l.y + 2} : HalfPoint{2 * l.x + 2, 2 * l.y + 1});
    report.avoids_white = report.avoids_white && polyline_avoids_white(v, cells, black);
    Polyline pl;
    pl.denominator = 2 * g.width;
    pl.cells = to_path(cells, setup.frame, g.width);
    for (const auto& p : v) pl.vertices.push_back(reframe(p, setup.frame, g.width));
    report.curves.push_back(std::move(pl));
  };
  for (const auto& p : paths.left_top) emit(p, true);
  for (const auto& p : paths.bottom_right) emit(p, false);

  report.containment_x = corridors_nest(paths.left_top, g, true) && corridors_nest(paths.bottom_right, g, true);
  report.containment_y = corridors_nest(paths.left_top, g, false) && corridors_nest(paths.bottom_right, g, false);
  return report;
}

}  // namespace

PathFamily build_vertical_paths(const SequenceSpec& spec, int k1, int k2, int k3, const EnumerationOptions& options) {
  return axis_family(spec, k1, k2, k3, false, options);
}

PathFamily build_horizontal_paths(const SequenceSpec& spec, int k1, int k2, int k3,
                                  const EnumerationOptions& options) {
  return axis_family(spec, k1, k2, k3, true, options);
}

PathFamily build_diagonal_paths(const SequenceSpec& spec, int k1, int k2, int k3, PatternType which,
                                const EnumerationOptions& options) {
  if (which != PatternType::D1 && which != PatternType::D2)
    throw PreconditionError("diagonal families are D1 or D2");
  check_hypotheses(spec, k1, k2, k3, which);
  const auto setup = diagonal_setup(spec, k1, k3, which);
  const auto& g = setup.g;
  const auto sets = materialize(spec, k3, options);
  const FramedBlack black(sets, setup.frame);
  const auto paths = diagonal_paths_in_frame(black, g);

  PathFamily family;
  family.level = k3;
  family.width = static_cast<std::uint64_t>(g.width);
  family.period = static_cast<std::uint64_t>(g.period);
  family.step = static_cast<std::uint64_t>(g.step);
  family.orientation = which == PatternType::D1 ? PathOrientation::diag1 : PathOrientation::diag2;
  family.from_translates = paths.from_translates;
  family.periodic = diagonal_translation_holds(paths, black, g);
  for (const auto& p : paths.left_top) {
    family.paths.push_back(to_path(p, setup.frame, g.width));
    family.connects.push_back(setup.first_label);
  }
  for (const auto& p : paths.bottom_right) {
    family.paths.push_back(to_path(p, setup.frame, g.width));
    family.connects.push_back(setup.second_label);
  }
  return family;
}

SliceCheck verify_slice_translations(const PathFamily& family) {
  SliceCheck check{true, true};
  const auto step = static_cast<std::int64_t>(family.step);
  // Per parent square, the cells of each path inside it.
  std::map<std::int64_t, std::pair<ICell, IPath>> row_ref, col_ref;
  for (const auto& path : family.paths) {
    std::map<ICell, IPath> pieces;
    for (const auto& c : path) {
      const auto ic = to_icell(c);
      pieces[{ic.x / step, ic.y / step}].push_back(ic);
    }
    for (auto& [square, cells] : pieces) {
      std::sort(cells.begin(), cells.end());
      auto r = row_ref.find(square.y);
      if (r == row_ref.end()) {
        row_ref.emplace(square.y, std::pair{square, cells});
      } else if (translate(r->second.second, (square.x - r->second.first.x) * step, 0) != cells) {
        check.rows = false;
      }
      auto c = col_ref.find(square.x);
      if (c == col_ref.end()) {
        col_ref.emplace(square.x, std::pair{square, cells});
      } else if (translate(c->second.second, 0, (square.y - c->second.first.y) * step) != cells) {
        check.columns = false;
      }
    }
  }
  return check;
}

bool corridors_are_translates(const PathFamily& family) {
  if (family.orientation != PathOrientation::vertical && family.orientation != PathOrientation::horizontal)
    return false;
  if (family.paths.empty()) return false;
  const bool along_x = family.orientation == PathOrientation::vertical;
  const auto step = static_cast<std::int64_t>(family.step);
  auto sorted = [](const Path& p) {
    IPath out = to_ipath(p);
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto base = sorted(family.paths.front());
  for (std::size_t a = 0; a < family.paths.size(); ++a) {
    const auto d = static_cast<std::int64_t>(a) * step;
    if (translate(base, along_x ? d : 0, along_x ? 0 : d) != sorted(family.paths[a])) return false;
  }
  return true;
}

CurveReport build_separating_curves(const SequenceSpec& spec, int k1, int k2, int k3, PathOrientation orientation,
                                    const EnumerationOptions& options) {
  switch (orientation) {
    case PathOrientation::vertical: return axis_curves(spec, k1, k2, k3, false, options);
    case PathOrientation::horizontal: return axis_curves(spec, k1, k2, k3, true, options);
    case PathOrientation::diag1: return diagonal_curves(spec, k1, k2, k3, PatternType::D1, options);
    case PathOrientation::diag2: return diagonal_curves(spec, k1, k2, k3, PatternType::D2, options);
  }
  throw PreconditionError("unknown orientation");
}

}  // namespace gsc
