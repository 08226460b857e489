#include "gsc/classify.hpp"

#include <algorithm>

#include "gsc/grid_graph.hpp"

namespace gsc {

std::string_view to_string(PatternType t) {
  switch (t) {
    case PatternType::V: return "V";
    case PatternType::H: return "H";
    case PatternType::D1: return "D1";
    case PatternType::D2: return "D2";
    case PatternType::C1: return "C1";
    case PatternType::C2: return "C2";
  }
  return "?";
}

bool TypeSet::has(PatternType t) const {
  switch (t) {
    case PatternType::V: return V;
    case PatternType::H: return H;
    case PatternType::D1: return D1;
    case PatternType::D2: return D2;
    case PatternType::C1: return C1;
    case PatternType::C2: return C2;
  }
  return false;
}

void TypeSet::set(PatternType t, bool value) {
  switch (t) {
    case PatternType::V: V = value; break;
    case PatternType::H: H = value; break;
    case PatternType::D1: D1 = value; break;
    case PatternType::D2: D2 = value; break;
    case PatternType::C1: C1 = value; break;
    case PatternType::C2: C2 = value; break;
  }
}

TypeSet make_types(std::initializer_list<PatternType> members) {
  TypeSet t;
  for (auto m : members) t.set(m, true);
  return t;
}

namespace {

// Where one component touches the border of the pattern grid.
struct BorderContacts {
  std::vector<int> top;     // columns i with (i, m-1) in K
  std::vector<int> bottom;  // columns i with (i, 0) in K
  std::vector<int> left;    // rows j with (0, j) in K
  std::vector<int> right;   // rows j with (m-1, j) in K
};

BorderContacts contacts_of(const std::vector<PatternCell>& cells, int m) {
  BorderContacts b;
  for (const auto& c : cells) {
    if (c.j == m - 1) b.top.push_back(c.i);
    if (c.j == 0) b.bottom.push_back(c.i);
    if (c.i == 0) b.left.push_back(c.j);
    if (c.i == m - 1) b.right.push_back(c.j);
  }
  for (auto* v : {&b.top, &b.bottom, &b.left, &b.right}) std::sort(v->begin(), v->end());
  return b;
}

// Smallest (a, b) with a in as, b in bs and |a - b| <= 1.
std::optional<std::pair<int, int>> close_pair(const std::vector<int>& as, const std::vector<int>& bs) {
  for (int a : as)
    for (int b : bs)
      if (b >= a - 1 && b <= a + 1) return std::pair{a, b};
  return std::nullopt;
}

bool contains(const std::vector<PatternCell>& sorted, PatternCell c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

// D1 and D2 differ only in the corners and in which border lists K1 / K2 must meet.
struct DiagonalRoles {
  PatternCell corner_a, corner_b;
  std::vector<int> BorderContacts::*k1_rows;  // always the left column
  std::vector<int> BorderContacts::*k1_cols;  // top (D1) or bottom (D2)
  std::vector<int> BorderContacts::*k2_rows;  // always the right column
  std::vector<int> BorderContacts::*k2_cols;  // bottom (D1) or top (D2)
};

std::optional<DiagonalWitness> diagonal_witness(const std::vector<std::vector<PatternCell>>& comps,
                                                const std::vector<BorderContacts>& borders,
                                                const DiagonalRoles& roles, bool distinct) {
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (contains(comps[k], roles.corner_a) && contains(comps[k], roles.corner_b)) {
      DiagonalWitness w;
      w.which_case = 1;
      w.component1 = w.component2 = static_cast<int>(k);
      return w;
    }
  }
  for (std::size_t k1 = 0; k1 < comps.size(); ++k1) {
    const auto& b1 = borders[k1];
    if ((b1.*roles.k1_rows).empty() || (b1.*roles.k1_cols).empty()) continue;
    for (std::size_t k2 = 0; k2 < comps.size(); ++k2) {
      if (distinct && k1 == k2) continue;
      const auto& b2 = borders[k2];
      auto rows = close_pair(b1.*roles.k1_rows, b2.*roles.k2_rows);
      if (!rows) continue;
      auto cols = close_pair(b1.*roles.k1_cols, b2.*roles.k2_cols);
      if (!cols) continue;
      DiagonalWitness w;
      w.which_case = 2;
      w.component1 = static_cast<int>(k1);
      w.component2 = static_cast<int>(k2);
      w.j1 = rows->first;
      w.j2 = rows->second;
      w.i1 = cols->first;
      w.i2 = cols->second;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

Classification classify(const Pattern& p, const ClassifyOptions& options) {
  const int m = p.m();
  Classification out;

  std::vector<Cell> black;
  for (const auto& c : complement(p))
    black.push_back({static_cast<std::uint64_t>(c.i), static_cast<std::uint64_t>(c.j)});
  const auto report = components(CellSet(static_cast<std::uint64_t>(m), std::move(black)), Adjacency::corner);

  std::vector<BorderContacts> borders;
  for (const auto& comp : report.components) {
    std::vector<PatternCell> cells;
    for (const auto& c : comp.cells) cells.push_back({static_cast<int>(c.x), static_cast<int>(c.y)});
    borders.push_back(contacts_of(cells, m));
    out.components.push_back(std::move(cells));
  }

  for (std::size_t k = 0; k < borders.size() && !out.v; ++k) {
    if (auto pr = close_pair(borders[k].top, borders[k].bottom))
      out.v = CuttingWitness{static_cast<int>(k), pr->first, pr->second};
  }
  for (std::size_t k = 0; k < borders.size() && !out.h; ++k) {
    if (auto pr = close_pair(borders[k].left, borders[k].right))
      out.h = CuttingWitness{static_cast<int>(k), pr->first, pr->second};
  }

  const DiagonalRoles d1_roles{{0, 0}, {m - 1, m - 1}, &BorderContacts::left, &BorderContacts::top,
                               &BorderContacts::right, &BorderContacts::bottom};
  const DiagonalRoles d2_roles{{0, m - 1}, {m - 1, 0}, &BorderContacts::left, &BorderContacts::bottom,
                               &BorderContacts::right, &BorderContacts::top};
  out.d1 = diagonal_witness(out.components, borders, d1_roles, options.distinct_diagonal_components);
  out.d2 = diagonal_witness(out.components, borders, d2_roles, options.distinct_diagonal_components);

  auto corner_witness = [&](PatternCell a, PatternCell b) -> std::optional<CornerWitness> {
    CornerWitness w;
    for (auto c : {a, b})
      if (p.is_black(c.i, c.j)) w.corners.push_back(c);
    if (w.corners.empty()) return std::nullopt;
    return w;
  };
  out.c1 = corner_witness({0, 0}, {m - 1, m - 1});
  out.c2 = corner_witness({0, m - 1}, {m - 1, 0});

  out.types.V = out.v.has_value();
  out.types.H = out.h.has_value();
  out.types.D1 = out.d1.has_value();
  out.types.D2 = out.d2.has_value();
  out.types.C1 = out.c1.has_value();
  out.types.C2 = out.c2.has_value();
  return out;
}

TypeSet types_of(const Pattern& p, const ClassifyOptions& options) { return classify(p, options).types; }

}  // namespace gsc
