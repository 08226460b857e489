#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gsc/carpet.hpp"
#include "gsc/classify.hpp"
#include "gsc/rational.hpp"

namespace gsc {

/// Extent of one white component: (max - min + 1) / m(n) per axis, the supremum of
/// |t - z| over points of the closed cells.
struct ComponentExtent {
  std::size_t component = 0;
  BoundingBox box;
  Rational extent_x;
  Rational extent_y;
};

struct AuditReport {
  int lemma = 1;
  std::array<int, 6> indices{};  // k1..k6
  Rational bound_x;
  Rational bound_y;
  int level = 0;                 // level whose white set was audited
  std::uint64_t width = 1;
  std::size_t white_cells = 0;
  std::size_t component_count = 0;
  Rational worst_x;
  Rational worst_y;
  std::vector<ComponentExtent> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks a lemma's ordering and type hypotheses, then measures every corner-adjacency
/// component of the white set at level max(k1..k6) against the lemma's bounds.
///   lemma 1: x <= 2/m(k1-1), y <= 2/m(k4-1)
///   lemma 2: x <= 4/m(k1-1), y <= 2/m(k1-1)
///   lemma 3: x, y <= 3/m(k-1) with k = min(k1, k4)
/// Throws PreconditionError naming the level and missing type when a hypothesis fails.
AuditReport audit_lemma(const SequenceSpec& spec, int lemma, const std::array<int, 6>& indices,
                        const EnumerationOptions& options = {});

/// The lemma's bounds alone, after checking only the index orderings.
std::pair<Rational, Rational> lemma_bounds(const SequenceSpec& spec, int lemma, const std::array<int, 6>& indices);

enum class VerdictStatus { guaranteed_totally_disconnected, unknown };

std::string_view to_string(VerdictStatus s);

/// Which part of the repeating tail supplies one clause of the theorem.
struct ClauseWitness {
  PatternType type = PatternType::V;
  std::vector<int> cycle_positions;  // 0-based positions in the cycle
  std::string generator_rule;        // for generator tails, e.g. "odd levels"
};

struct TheoremVerdict {
  VerdictStatus status = VerdictStatus::unknown;
  int theorem = 0;  // 1 for one pattern per level, 2 for the non-uniform variant
  std::string reason;
  std::optional<ClauseWitness> t1, t2, c1, c2;
};

/// Decides the sufficient condition for total disconnectedness on the repeating tail.
/// Never concludes connectedness: anything short of the condition is `unknown`.
TheoremVerdict check_theorem(const SequenceSpec& spec);

struct TrendPoint {
  int level = 0;
  std::uint64_t width = 1;
  std::size_t components = 1;
  Rational worst_x{1};
  Rational worst_y{1};
};

/// Largest white-component extent per axis for levels 0..max_level (level 0 is the unit square).
std::vector<TrendPoint> diameter_trend(const SequenceSpec& spec, int max_level,
                                       const EnumerationOptions& options = {});

}  // namespace gsc
