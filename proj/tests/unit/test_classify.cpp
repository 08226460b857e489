#include <doctest.h>

#include <random>

#include "classify_oracle.hpp"
#include "gsc/classify.hpp"
#include "gsc/pattern.hpp"

using namespace gsc;
using enum PatternType;

namespace {

// Every pattern of side m with a nonempty white set, by bitmask.
std::vector<Pattern> all_patterns(int m) {
  std::vector<Pattern> out;
  const int n = m * m;
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<PatternCell> black;
    for (int b = 0; b < n; ++b)
      if (mask >> b & 1) black.push_back({b % m, b / m});
    out.push_back(Pattern::from_black(m, black));
  }
  return out;
}

TypeSet mirrored(const TypeSet& t) {
  TypeSet s = t;
  s.D1 = t.D2;
  s.D2 = t.D1;
  s.C1 = t.C2;
  s.C2 = t.C1;
  return s;
}

}  // namespace

TEST_CASE("worked patterns") {
  CHECK(types_of(patterns::classic()) == TypeSet{});
  CHECK(types_of(patterns::left_column_black(3)) == make_types({V, C1, C2}));
  CHECK(types_of(Pattern(2, {{0, 0}})) == make_types({V, H, D1, D2, C1, C2}));
  CHECK(types_of(patterns::superdiagonal_plus_corner(3)) == make_types({D1, C2}));
  CHECK(types_of(patterns::bottom_row_black(3)) == make_types({H, C1, C2}));
}

TEST_CASE("witnesses of the worked patterns") {
  const auto lc = classify(patterns::left_column_black(3));
  REQUIRE(lc.v);
  CHECK(lc.v->first == 0);
  CHECK(lc.v->second == 0);
  REQUIRE(lc.c1);
  CHECK(lc.c1->corners == std::vector<PatternCell>{{0, 0}});

  const auto sd = classify(patterns::superdiagonal_plus_corner(3));
  REQUIRE(sd.d1);
  CHECK(sd.d1->which_case == 2);
  CHECK(sd.components.size() == 2);
  CHECK(sd.components[sd.d1->component1] == std::vector<PatternCell>{{0, 1}, {1, 2}});
  CHECK(sd.components[sd.d1->component2] == std::vector<PatternCell>{{2, 0}});
  CHECK(sd.d1->j1 == 1);
  CHECK(sd.d1->j2 == 0);
  CHECK(sd.d1->i1 == 1);
  CHECK(sd.d1->i2 == 2);

  const auto tiny = classify(Pattern(2, {{0, 0}}));
  REQUIRE(tiny.d1);
  CHECK(tiny.d1->which_case == 2);
  CHECK(tiny.d1->component1 == tiny.d1->component2);
  REQUIRE(tiny.d2);
  CHECK(tiny.d2->which_case == 1);
}

TEST_CASE("strict diagonal option") {
  const Pattern tiny(2, {{0, 0}});
  ClassifyOptions strict{true};
  CHECK_FALSE(types_of(tiny, strict).D1);
  CHECK(types_of(tiny, strict).D2);
  CHECK(types_of(patterns::superdiagonal_plus_corner(3), strict).D1);
  for (const auto& p : all_patterns(3)) CHECK(types_of(p, strict) == oracle::classify_oracle(p, true));
}

TEST_CASE("agrees with the oracle on every 2x2 and 3x3 pattern") {
  const auto two = all_patterns(2);
  const auto three = all_patterns(3);
  CHECK(two.size() == 15);
  CHECK(three.size() == 511);
  for (const auto& p : two) CHECK(types_of(p) == oracle::classify_oracle(p));
  for (const auto& p : three) CHECK(types_of(p) == oracle::classify_oracle(p));
}

TEST_CASE("agrees with the oracle on random 4x4 and 5x5 patterns") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 4 + trial % 2;
    std::bernoulli_distribution black(0.25 + 0.5 * (trial % 5) / 4.0);
    std::vector<PatternCell> cells;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (black(rng)) cells.push_back({i, j});
    if (static_cast<int>(cells.size()) == m * m) continue;
    const auto p = Pattern::from_black(m, cells);
    CHECK(types_of(p) == oracle::classify_oracle(p));
  }
}

TEST_CASE("oracle refuses large patterns") {
  CHECK_THROWS(oracle::classify_oracle(patterns::all_white(6)));
}

TEST_CASE("symmetries") {
  for (const auto& p : all_patterns(3)) {
    const auto t = types_of(p);
    CHECK(types_of(mirror_horizontal(p)) == mirrored(t));
    CHECK(types_of(mirror_vertical(p)) == mirrored(t));
    CHECK(types_of(rotate_180(p)) == t);
    const auto tt = types_of(transpose(p));
    CHECK(tt.V == t.H);
    CHECK(tt.H == t.V);
    CHECK(tt.D1 == t.D1);
    CHECK(tt.D2 == t.D2);
  }
}

TEST_CASE("structural invariants") {
  for (const auto& p : all_patterns(3)) {
    const auto t = types_of(p);
    if (complement(p).empty()) CHECK(t.empty());
    if (p.is_black(0, 0) && p.is_black(2, 2) && p.is_black(0, 2) && p.is_black(2, 0)) {
      CHECK(t.C1);
      CHECK(t.C2);
    }
  }
}
