#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsc/grid_graph.hpp"
#include "gsc/pattern.hpp"

namespace gsc {

using BigInt = boost::multiprecision::cpp_int;

/// Every white parent receives patterns[index].
struct UniformAssignment {
  std::size_t index = 0;
  friend bool operator==(const UniformAssignment&, const UniformAssignment&) = default;
};
/// Parent of rank r receives patterns[r mod n].
struct CyclicAssignment {
  friend bool operator==(const CyclicAssignment&, const CyclicAssignment&) = default;
};
/// Parent of rank r receives patterns[indices[r]].
struct ExplicitAssignment {
  std::vector<std::size_t> indices;
  friend bool operator==(const ExplicitAssignment&, const ExplicitAssignment&) = default;
};
/// Parent (x, y) at level k receives patterns[seeded_mix(seed, k, x, y) mod n].
struct SeededAssignment {
  std::uint64_t seed = 0;
  friend bool operator==(const SeededAssignment&, const SeededAssignment&) = default;
};

using Assignment = std::variant<UniformAssignment, CyclicAssignment, ExplicitAssignment, SeededAssignment>;

/// Patterns available at one level and the rule distributing them over white parents.
/// Parent ranks count white parents top row first, left to right within a row.
struct LevelSpec {
  std::vector<Pattern> patterns;
  Assignment assignment = UniformAssignment{};

  int m() const { return patterns.front().m(); }
  /// Patterns that can actually be applied: the chosen one for Uniform, all otherwise.
  std::vector<const Pattern*> applied() const;
  /// Exactly one pattern is applied to every white parent.
  bool single_pattern() const { return applied().size() == 1; }
  /// Throws PreconditionError on an empty list, mixed sides or a bad uniform index.
  void validate() const;

  friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

/// Named rule producing level specs on demand, for width-growing tails.
struct GeneratorTag {
  std::string name;
  std::map<std::string, std::int64_t> params;
  friend bool operator==(const GeneratorTag&, const GeneratorTag&) = default;
};

/// Finite prefix followed by either a repeating cycle or a generator (or nothing).
struct SequenceSpec {
  std::vector<LevelSpec> prefix;
  std::vector<LevelSpec> cycle;
  std::optional<GeneratorTag> generator;

  bool is_finite() const { return cycle.empty() && !generator; }
  /// Number of defined levels, or nullopt when the sequence is infinite.
  std::optional<int> defined_levels() const;
  /// Throws PreconditionError when the spec is empty, has both a cycle and a generator,
  /// names an unknown generator, or contains an invalid level.
  void validate() const;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

/// Builds a spec where every level applies one pattern to all white parents.
SequenceSpec uniform_spec(const std::vector<Pattern>& prefix, const std::vector<Pattern>& cycle = {});

/// Level k of the width-growing dim2 family: side k+1, odd levels get the left column
/// black, even levels the superdiagonal plus the bottom-right corner.
LevelSpec dim2_level(int k);

/// Specification of level k >= 1. Throws PreconditionError past the end of a finite spec.
LevelSpec level_pattern(const SequenceSpec& spec, int k);

/// m(n) = m_1 * ... * m_n, exact; m(0) = 1.
BigInt level_width(const SequenceSpec& spec, int n);

/// m(n) as a machine integer; throws CapacityError once it exceeds 2^62.
std::uint64_t level_width_checked(const SequenceSpec& spec, int n);

/// Position of `child` inside `parent` one level down.
Cell embed_child(Cell parent, PatternCell child, int m);

/// The 64-bit mixer behind seeded assignment (splitmix64 finaliser chained over the inputs).
std::uint64_t seeded_mix(std::uint64_t seed, std::uint64_t level, std::uint64_t x, std::uint64_t y);

inline constexpr std::uint64_t kDefaultCellCap = 100'000'000;

struct EnumerationOptions {
  std::uint64_t cap = kDefaultCellCap;  // largest cell list any step may build
  unsigned threads = 1;
};

/// White and black squares of one level. Black membership is answered exactly from the
/// white list; the black list itself is only built on request.
class LevelSets {
 public:
  LevelSets(int level, std::uint64_t width, CellSet white);

  int level() const { return level_; }
  std::uint64_t width() const { return width_; }
  const CellSet& white() const { return white_; }

  bool is_white(Cell c) const { return white_.contains(c); }
  bool is_black(Cell c) const { return !is_white(c); }
  std::uint64_t black_count() const { return width_ * width_ - white_.size(); }

  /// Enumerates B_n; throws CapacityError when width^2 exceeds `cap`.
  CellSet black(std::uint64_t cap = kDefaultCellCap) const;

 private:
  int level_;
  std::uint64_t width_;
  CellSet white_;
};

/// W_n by direct recursion from W_0 = {(0, 0)}.
/// Throws CapacityError past width 2^31 or the cell cap, PreconditionError on a bad Explicit list.
LevelSets materialize(const SequenceSpec& spec, int n, const EnumerationOptions& options = {});

/// |W_n|; a product of per-level white counts whenever no level depends on parent position.
BigInt white_count(const SequenceSpec& spec, int n, const EnumerationOptions& options = {});

}  // namespace gsc
