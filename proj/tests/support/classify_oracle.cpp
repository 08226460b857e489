#include "classify_oracle.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

struct Grid {
  int m;
  std::vector<std::vector<int>> label;  // label[i][j], -1 for white

  void fill(int i, int j, int id) {
    if (i < 0 || j < 0 || i >= m || j >= m) return;
    if (label[i][j] != -2) return;
    label[i][j] = id;
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj)
        if (di || dj) fill(i + di, j + dj, id);
  }
};

bool near(int a, int b) { return std::abs(a - b) <= 1; }

}  // namespace

gsc::TypeSet classify_oracle(const gsc::Pattern& p, bool distinct) {
  const int m = p.m();
  if (m > 5) throw std::invalid_argument("classify_oracle: m > 5");
  Grid g{m, std::vector<std::vector<int>>(m, std::vector<int>(m, -1))};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.is_black(i, j)) g.label[i][j] = -2;
  int count = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (g.label[i][j] == -2) g.fill(i, j, count++);

  auto in = [&](int i, int j, int k) { return g.label[i][j] == k; };
  const int last = m - 1;
  gsc::TypeSet t;

  for (int k = 0; k < count; ++k) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (near(a, b) && in(a, last, k) && in(b, 0, k)) t.V = true;
        if (near(a, b) && in(0, a, k) && in(last, b, k)) t.H = true;
      }
    }
    if (in(0, 0, k) && in(last, last, k)) t.D1 = true;
    if (in(0, last, k) && in(last, 0, k)) t.D2 = true;
  }

  for (int k1 = 0; k1 < count; ++k1) {
    for (int k2 = 0; k2 < count; ++k2) {
      if (distinct && k1 == k2) continue;
      for (int j1 = 0; j1 < m; ++j1) {
        for (int j2 = 0; j2 < m; ++j2) {
          if (!near(j1, j2) || !in(0, j1, k1) || !in(last, j2, k2)) continue;
          for (int i1 = 0; i1 < m; ++i1) {
            for (int i2 = 0; i2 < m; ++i2) {
              if (!near(i1, i2)) continue;
              // D1: K1 left and top, K2 bottom and right.
              if (in(i1, last, k1) && in(i2, 0, k2)) t.D1 = true;
              // D2: K1 left and bottom, K2 top and right.
              if (in(i1, 0, k1) && in(i2, last, k2)) t.D2 = true;
            }
          }
        }
      }
    }
  }

  t.C1 = p.is_black(0, 0) || p.is_black(last, last);
  t.C2 = p.is_black(0, last) || p.is_black(last, 0);
  return t;
}

}  // namespace oracle
