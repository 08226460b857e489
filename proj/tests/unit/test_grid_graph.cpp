#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "gsc/errors.hpp"
#include "gsc/grid_graph.hpp"
#include "gsc/union_find.hpp"

using namespace gsc;

namespace {

// Component count by breadth-first labelling over a std::set.
std::size_t count_components(const std::vector<Cell>& cells, bool corner) {
  std::set<std::pair<long, long>> left;
  for (auto c : cells) left.insert({static_cast<long>(c.x), static_cast<long>(c.y)});
  std::size_t n = 0;
  while (!left.empty()) {
    ++n;
    std::deque<std::pair<long, long>> q{*left.begin()};
    left.erase(left.begin());
    while (!q.empty()) {
      auto [x, y] = q.front();
      q.pop_front();
      for (long dx = -1; dx <= 1; ++dx)
        for (long dy = -1; dy <= 1; ++dy) {
          if (!corner && dx != 0 && dy != 0) continue;
          auto it = left.find({x + dx, y + dy});
          if (it != left.end()) {
            q.push_back(*it);
            left.erase(it);
          }
        }
    }
  }
  return n;
}

// Shortest side path length between two predicates, or -1.
long shortest(const std::vector<Cell>& cells, std::uint64_t w, bool from_top) {
  std::map<std::pair<long, long>, long> dist;
  std::set<std::pair<long, long>> in;
  for (auto c : cells) in.insert({static_cast<long>(c.x), static_cast<long>(c.y)});
  std::deque<std::pair<long, long>> q;
  for (auto p : in)
    if (from_top && p.second == static_cast<long>(w) - 1) {
      dist[p] = 1;
      q.push_back(p);
    }
  while (!q.empty()) {
    auto p = q.front();
    q.pop_front();
    if (p.second == 0) return dist[p];
    for (auto d : {std::pair{1L, 0L}, {-1L, 0L}, {0L, 1L}, {0L, -1L}}) {
      std::pair n{p.first + d.first, p.second + d.second};
      if (in.contains(n) && !dist.contains(n)) {
        dist[n] = dist[p] + 1;
        q.push_back(n);
      }
    }
  }
  return -1;
}

std::vector<Cell> random_cells(std::mt19937_64& rng, std::uint64_t w, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Cell> out;
  for (std::uint64_t x = 0; x < w; ++x)
    for (std::uint64_t y = 0; y < w; ++y)
      if (keep(rng)) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("cell sets sort, deduplicate and check range") {
  CellSet s(4, {{2, 1}, {0, 3}, {2, 1}, {0, 0}});
  CHECK(s.size() == 3);
  CHECK(s.cells().front() == Cell{0, 0});
  CHECK(s.rank_of({2, 1}) == 2u);
  CHECK_FALSE(s.rank_of({1, 1}));
  CHECK_THROWS_AS(CellSet(4, {{4, 0}}), PreconditionError);
}

TEST_CASE("adjacency and edge kinds") {
  CHECK(adjacent({1, 1}, {2, 2}, Adjacency::corner));
  CHECK_FALSE(adjacent({1, 1}, {2, 2}, Adjacency::side));
  CHECK_FALSE(adjacent({1, 1}, {1, 1}, Adjacency::corner));
  CHECK(edge_kind({0, 0}, {1, 0}) == EdgeKind::horizontal);
  CHECK(edge_kind({0, 0}, {0, 1}) == EdgeKind::vertical);
  CHECK(edge_kind({0, 0}, {1, 1}) == EdgeKind::diag_backslash);
  CHECK(edge_kind({0, 1}, {1, 0}) == EdgeKind::diag_slash);
  CHECK_THROWS_AS(edge_kind({0, 0}, {2, 0}), PreconditionError);
}

TEST_CASE("union find") {
  DisjointSet d(5);
  d.unite(0, 1);
  d.unite(3, 4);
  d.unite(1, 4);
  CHECK(d.find(0) == d.find(3));
  CHECK(d.find(2) != d.find(0));
  CHECK(d.size_of(4) == 4);
}

TEST_CASE("components agree with a flood fill oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t w = 2 + trial % 12;
    const auto cells = random_cells(rng, w, 0.3 + 0.4 * (trial % 3) / 2.0);
    CellSet s(w, cells);
    for (auto mode : {Adjacency::corner, Adjacency::side}) {
      const auto r = components(s, mode);
      CHECK(r.components.size() == count_components(cells, mode == Adjacency::corner));
      std::size_t total = 0;
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        total += r.components[i].cells.size();
        if (i > 0) CHECK(r.components[i - 1].cells.front() < r.components[i].cells.front());
      }
      CHECK(total == s.size());
    }
  }
}

TEST_CASE("components: diagonal touch joins only in corner mode") {
  CellSet s(2, {{0, 0}, {1, 1}});
  CHECK(components(s, Adjacency::corner).components.size() == 1);
  CHECK(components(s, Adjacency::side).components.size() == 2);
  const auto box = components(s, Adjacency::corner).components[0].box;
  CHECK(box.width() == 2);
  CHECK(box.height() == 2);
}

TEST_CASE("crossing paths are shortest valid paths") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t w = 3 + trial % 10;
    const auto cells = random_cells(rng, w, 0.65);
    CellSet s(w, cells);
    auto p = crossing_path(s, Adjacency::side, [&](Cell c) { return c.y == w - 1; }, [](Cell c) { return c.y == 0; });
    const long expected = shortest(cells, w, true);
    if (expected < 0) {
      CHECK_FALSE(p);
      continue;
    }
    REQUIRE(p);
    CHECK(static_cast<long>(p->size()) == expected);
    CHECK(is_path_in(*p, s, Adjacency::side));
    CHECK(p->front().y == w - 1);
    CHECK(p->back().y == 0);
  }
}

TEST_CASE("crossing path respects the restriction") {
  std::vector<Cell> all;
  for (std::uint64_t x = 0; x < 3; ++x)
    for (std::uint64_t y = 0; y < 3; ++y) all.push_back({x, y});
  CellSet s(3, all);
  auto p = crossing_path(s, Adjacency::side, [](Cell c) { return c.y == 2; }, [](Cell c) { return c.y == 0; },
                         [](Cell c) { return c.x == 2; });
  REQUIRE(p);
  CHECK(*p == Path{{2, 2}, {2, 1}, {2, 0}});
  CHECK(corridor(*p, 3).size() == 3);
  CHECK_FALSE(is_path_in(Path{{0, 0}, {1, 1}}, s, Adjacency::side));
  CHECK(is_path_in(Path{{0, 0}, {1, 1}}, s, Adjacency::corner));
  CHECK_FALSE(is_path_in(Path{{0, 0}, {0, 1}, {0, 0}}, s, Adjacency::side));
}
