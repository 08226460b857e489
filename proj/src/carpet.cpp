#include "gsc/carpet.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "gsc/errors.hpp"

namespace gsc {

std::vector<const Pattern*> LevelSpec::applied() const {
  if (const auto* u = std::get_if<UniformAssignment>(&assignment)) return {&patterns.at(u->index)};
  std::vector<const Pattern*> out;
  for (const auto& p : patterns) out.push_back(&p);
  return out;
}

void LevelSpec::validate() const {
  if (patterns.empty()) throw PreconditionError("level has no patterns");
  for (const auto& p : patterns)
    if (p.m() != patterns.front().m()) throw PreconditionError("patterns of one level must share their side");
  if (const auto* u = std::get_if<UniformAssignment>(&assignment)) {
    if (u->index >= patterns.size())
      throw PreconditionError("uniform index " + std::to_string(u->index) + " out of range");
  }
  if (const auto* e = std::get_if<ExplicitAssignment>(&assignment)) {
    for (auto idx : e->indices)
      if (idx >= patterns.size())
        throw PreconditionError("explicit index " + std::to_string(idx) + " out of range");
  }
}

std::optional<int> SequenceSpec::defined_levels() const {
  if (!is_finite()) return std::nullopt;
  return static_cast<int>(prefix.size());
}

void SequenceSpec::validate() const {
  if (prefix.empty() && cycle.empty() && !generator) throw PreconditionError("sequence defines no level");
  if (!cycle.empty() && generator) throw PreconditionError("a sequence has either a cycle or a generator");
  if (generator && generator->name != "dim2")
    throw PreconditionError("unknown generator '" + generator->name + "'");
  for (const auto& l : prefix) l.validate();
  for (const auto& l : cycle) l.validate();
}

SequenceSpec uniform_spec(const std::vector<Pattern>& prefix, const std::vector<Pattern>& cycle) {
  SequenceSpec spec;
  for (const auto& p : prefix) spec.prefix.push_back({{p}, UniformAssignment{}});
  for (const auto& p : cycle) spec.cycle.push_back({{p}, UniformAssignment{}});
  return spec;
}

LevelSpec dim2_level(int k) {
  if (k < 1) throw PreconditionError("levels start at 1");
  const int m = k + 1;
  Pattern p = (k % 2 == 1) ? patterns::left_column_black(m) : patterns::superdiagonal_plus_corner(m);
  return {{std::move(p)}, UniformAssignment{}};
}

LevelSpec level_pattern(const SequenceSpec& spec, int k) {
  if (k < 1) throw PreconditionError("levels start at 1, got " + std::to_string(k));
  const auto idx = static_cast<std::size_t>(k - 1);
  if (idx < spec.prefix.size()) return spec.prefix[idx];
  if (!spec.cycle.empty()) return spec.cycle[(idx - spec.prefix.size()) % spec.cycle.size()];
  if (spec.generator) return dim2_level(k);
  throw PreconditionError("level " + std::to_string(k) + " is beyond the " +
                          std::to_string(spec.prefix.size()) + " levels of a finite sequence");
}

BigInt level_width(const SequenceSpec& spec, int n) {
  if (n < 0) throw PreconditionError("negative level");
  BigInt w = 1;
  for (int k = 1; k <= n; ++k) w *= level_pattern(spec, k).m();
  return w;
}

std::uint64_t level_width_checked(const SequenceSpec& spec, int n) {
  if (n < 0) throw PreconditionError("negative level");
  std::uint64_t w = 1;
  for (int k = 1; k <= n; ++k) {
    const auto m = static_cast<std::uint64_t>(level_pattern(spec, k).m());
    if (w > kMaxEnumerableWidth / m)
      throw CapacityError("level " + std::to_string(n) + " too deep to enumerate (width exceeds 2^62)");
    w *= m;
  }
  return w;
}

Cell embed_child(Cell parent, PatternCell child, int m) {
  const auto mm = static_cast<std::uint64_t>(m);
  return {parent.x * mm + static_cast<std::uint64_t>(child.i), parent.y * mm + static_cast<std::uint64_t>(child.j)};
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Rank of every parent in the (y descending, x ascending) order.
std::vector<std::size_t> parent_ranks(const std::vector<Cell>& parents) {
  std::vector<std::size_t> order(parents.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (parents[a].y != parents[b].y) return parents[a].y > parents[b].y;
    return parents[a].x < parents[b].x;
  });
  std::vector<std::size_t> rank(parents.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

std::vector<std::size_t> choose_patterns(const LevelSpec& spec, int level, const std::vector<Cell>& parents) {
  const std::size_t n = spec.patterns.size();
  std::vector<std::size_t> choice(parents.size(), 0);
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, UniformAssignment>) {
          std::fill(choice.begin(), choice.end(), a.index);
        } else if constexpr (std::is_same_v<A, CyclicAssignment>) {
          const auto rank = parent_ranks(parents);
          for (std::size_t p = 0; p < parents.size(); ++p) choice[p] = rank[p] % n;
        } else if constexpr (std::is_same_v<A, ExplicitAssignment>) {
          if (a.indices.size() != parents.size())
            throw PreconditionError("level " + std::to_string(level) + ": explicit assignment lists " +
                                    std::to_string(a.indices.size()) + " indices for " +
                                    std::to_string(parents.size()) + " white parents");
          const auto rank = parent_ranks(parents);
          for (std::size_t p = 0; p < parents.size(); ++p) choice[p] = a.indices[rank[p]];
        } else {
          for (std::size_t p = 0; p < parents.size(); ++p)
            choice[p] = seeded_mix(a.seed, static_cast<std::uint64_t>(level), parents[p].x, parents[p].y) % n;
        }
      },
      spec.assignment);
  return choice;
}

void expand_range(const std::vector<Cell>& parents, const std::vector<std::size_t>& choice,
                  const std::vector<std::vector<PatternCell>>& whites, int m, std::size_t begin, std::size_t end,
                  std::vector<Cell>& out) {
  for (std::size_t p = begin; p < end; ++p)
    for (const auto& c : whites[choice[p]]) out.push_back(embed_child(parents[p], c, m));
}

}  // namespace

std::uint64_t seeded_mix(std::uint64_t seed, std::uint64_t level, std::uint64_t x, std::uint64_t y) {
  return splitmix64(splitmix64(splitmix64(seed ^ level) ^ x) ^ y);
}

LevelSets::LevelSets(int level, std::uint64_t width, CellSet white)
    : level_(level), width_(width), white_(std::move(white)) {}

CellSet LevelSets::black(std::uint64_t cap) const {
  if (width_ > (std::uint64_t{1} << 31) || width_ * width_ > cap)
    throw CapacityError("black set of width " + std::to_string(width_) + " exceeds the cell cap");
  std::vector<Cell> out;
  out.reserve(black_count());
  const auto& white = white_.cells();
  std::size_t w = 0;
  for (std::uint64_t x = 0; x < width_; ++x) {
    for (std::uint64_t y = 0; y < width_; ++y) {
      const Cell c{x, y};
      if (w < white.size() && white[w] == c) {
        ++w;
        continue;
      }
      out.push_back(c);
    }
  }
  return CellSet::from_sorted(width_, std::move(out));
}

LevelSets materialize(const SequenceSpec& spec, int n, const EnumerationOptions& options) {
  if (n < 0) throw PreconditionError("negative level");
  const auto width = level_width_checked(spec, n);
  if (width > (std::uint64_t{1} << 31))
    throw CapacityError("level " + std::to_string(n) + " width " + std::to_string(width) +
                        " exceeds the enumeration bound 2^31");

  std::vector<Cell> current{{0, 0}};
  std::uint64_t current_width = 1;
  for (int k = 1; k <= n; ++k) {
    const LevelSpec ls = level_pattern(spec, k);
    ls.validate();
    const int m = ls.m();

    std::vector<std::vector<PatternCell>> whites;
    std::size_t max_white = 0;
    for (const auto& p : ls.patterns) {
      whites.push_back(p.white_cells());
      max_white = std::max(max_white, whites.back().size());
    }
    const auto choice = choose_patterns(ls, k, current);

    std::uint64_t expected = 0;
    for (auto c : choice) expected += whites[c].size();
    if (expected > options.cap)
      throw CapacityError("level " + std::to_string(k) + " has " + std::to_string(expected) +
                          " white cells, above the cap of " + std::to_string(options.cap));

    std::vector<Cell> next;
    next.reserve(expected);
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || current.size() < 4096) {
      expand_range(current, choice, whites, m, 0, current.size(), next);
    } else {
      std::vector<std::vector<Cell>> parts(threads);
      std::vector<std::thread> pool;
      const std::size_t chunk = (current.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t b = std::min(current.size(), t * chunk);
        const std::size_t e = std::min(current.size(), b + chunk);
        pool.emplace_back([&, b, e, t] { expand_range(current, choice, whites, m, b, e, parts[t]); });
      }
      for (auto& th : pool) th.join();
      for (auto& part : parts) next.insert(next.end(), part.begin(), part.end());
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
    current_width *= static_cast<std::uint64_t>(m);
  }
  return LevelSets(n, current_width, CellSet::from_sorted(current_width, std::move(current)));
}

BigInt white_count(const SequenceSpec& spec, int n, const EnumerationOptions& options) {
  if (n < 0) throw PreconditionError("negative level");
  BigInt count = 1;
  for (int k = 1; k <= n; ++k) {
    const LevelSpec ls = level_pattern(spec, k);
    ls.validate();
    const auto applied = ls.applied();
    const bool position_free =
        !std::holds_alternative<ExplicitAssignment>(ls.assignment) &&
        std::all_of(applied.begin(), applied.end(),
                    [&](const Pattern* p) { return p->white_count() == applied.front()->white_count(); });
    if (!position_free) return BigInt(materialize(spec, n, options).white().size());
    count *= applied.front()->white_count();
  }
  return count;
}

}  // namespace gsc
