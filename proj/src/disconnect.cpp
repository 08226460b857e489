#include "gsc/disconnect.hpp"

#include <algorithm>

#include "gsc/errors.hpp"

namespace gsc {

namespace {

std::string level_name(int k) { return "level " + std::to_string(k); }

// Every applied pattern of level k must carry one of `types`.
void require_types(const SequenceSpec& spec, int k, std::initializer_list<PatternType> types) {
  const auto ls = level_pattern(spec, k);
  const auto applied = ls.applied();
  for (std::size_t i = 0; i < applied.size(); ++i) {
    const auto t = types_of(*applied[i]);
    const bool ok = std::any_of(types.begin(), types.end(), [&](PatternType want) { return t.has(want); });
    if (!ok) {
      std::string names;
      for (auto want : types) names += (names.empty() ? "" : " or ") + std::string(to_string(want));
      throw PreconditionError(level_name(k) + ": pattern " + std::to_string(i) + " is not of type " + names);
    }
  }
}

void require_single(const SequenceSpec& spec, int k) {
  if (!level_pattern(spec, k).single_pattern())
    throw PreconditionError(level_name(k) + " applies more than one pattern; the lemmas need a single one");
}

void require_less(int a, const char* a_name, int b, const char* b_name) {
  if (!(a < b))
    throw PreconditionError(std::string("index ordering violated: ") + a_name + "=" + std::to_string(a) +
                            " must be below " + b_name + "=" + std::to_string(b));
}

void check_orderings(int lemma, const std::array<int, 6>& k) {
  if (lemma < 1 || lemma > 3) throw PreconditionError("lemma must be 1, 2 or 3");
  require_less(1, "1", k[0], "k1");
  require_less(k[0], "k1", k[1], "k2");
  require_less(k[0], "k1", k[2], "k3");
  if (lemma != 3) require_less(k[0], "k1", k[3], "k4");
  if (k[3] < 1) throw PreconditionError("k4 must be a level (>= 1)");
  require_less(k[3], "k4", k[4], "k5");
  require_less(k[3], "k4", k[5], "k6");
}

Rational over_width(std::int64_t numerator, const SequenceSpec& spec, int level) {
  return Rational(numerator, static_cast<std::int64_t>(level_width_checked(spec, level)));
}

}  // namespace

std::pair<Rational, Rational> lemma_bounds(const SequenceSpec& spec, int lemma, const std::array<int, 6>& k) {
  check_orderings(lemma, k);
  switch (lemma) {
    case 1: return {over_width(2, spec, k[0] - 1), over_width(2, spec, k[3] - 1)};
    case 2: return {over_width(4, spec, k[0] - 1), over_width(2, spec, k[0] - 1)};
    default: {
      const int kmin = std::min(k[0], k[3]);
      return {over_width(3, spec, kmin - 1), over_width(3, spec, kmin - 1)};
    }
  }
}

AuditReport audit_lemma(const SequenceSpec& spec, int lemma, const std::array<int, 6>& k,
                        const EnumerationOptions& options) {
  auto [bx, by] = lemma_bounds(spec, lemma, k);

  for (int level : k) require_single(spec, level);
  using enum PatternType;
  switch (lemma) {
    case 1:
      require_types(spec, k[0], {V});
      require_types(spec, k[3], {H});
      break;
    case 2:
      require_types(spec, k[0], {D1, D2});
      require_types(spec, k[3], {H, V});
      break;
    default:
      require_types(spec, k[0], {D1});
      require_types(spec, k[3], {D2});
      break;
  }
  require_types(spec, k[1], {C1});
  require_types(spec, k[4], {C1});
  require_types(spec, k[2], {C2});
  require_types(spec, k[5], {C2});

  AuditReport report;
  report.lemma = lemma;
  report.indices = k;
  report.bound_x = bx;
  report.bound_y = by;
  report.level = *std::max_element(k.begin(), k.end());

  const auto sets = materialize(spec, report.level, options);
  report.width = sets.width();
  report.white_cells = sets.white().size();
  const auto comps = components(sets.white(), Adjacency::corner);
  report.component_count = comps.components.size();

  const auto w = static_cast<std::int64_t>(sets.width());
  for (std::size_t c = 0; c < comps.components.size(); ++c) {
    const auto& box = comps.components[c].box;
    const Rational ex(static_cast<std::int64_t>(box.width()), w);
    const Rational ey(static_cast<std::int64_t>(box.height()), w);
    report.worst_x = std::max(report.worst_x, ex);
    report.worst_y = std::max(report.worst_y, ey);
    if (ex > bx || ey > by) report.violations.push_back({c, box, ex, ey});
  }
  return report;
}

std::string_view to_string(VerdictStatus s) {
  return s == VerdictStatus::guaranteed_totally_disconnected ? "guaranteed_totally_disconnected" : "unknown";
}

TheoremVerdict check_theorem(const SequenceSpec& spec) {
  TheoremVerdict verdict;
  if (spec.generator) {
    // The dim2 family is fixed: odd levels carry V (and C1, C2), even levels D1 and C2.
    verdict.status = VerdictStatus::guaranteed_totally_disconnected;
    verdict.theorem = 1;
    verdict.reason = "generator 'dim2' supplies V and C1 on odd levels, D1 and C2 on even levels";
    verdict.t1 = ClauseWitness{PatternType::V, {}, "odd levels"};
    verdict.t2 = ClauseWitness{PatternType::D1, {}, "even levels"};
    verdict.c1 = ClauseWitness{PatternType::C1, {}, "odd levels"};
    verdict.c2 = ClauseWitness{PatternType::C2, {}, "all levels"};
    return verdict;
  }
  if (spec.cycle.empty()) {
    verdict.reason = "finite specification";
    return verdict;
  }

  const auto is_single = [](const LevelSpec& l) { return l.single_pattern(); };
  const bool uniform = std::all_of(spec.prefix.begin(), spec.prefix.end(), is_single) &&
                       std::all_of(spec.cycle.begin(), spec.cycle.end(), is_single);
  verdict.theorem = uniform ? 1 : 2;

  // Cutting types count only on single-pattern levels; corner types need every applied pattern.
  std::array<std::vector<int>, 6> positions;
  for (std::size_t pos = 0; pos < spec.cycle.size(); ++pos) {
    const auto applied = spec.cycle[pos].applied();
    std::vector<TypeSet> types;
    for (const auto* p : applied) types.push_back(types_of(*p));
    for (std::size_t t = 0; t < kAllTypes.size(); ++t) {
      const auto type = kAllTypes[t];
      const bool cutting = t < 4;
      bool holds = false;
      if (cutting) {
        holds = applied.size() == 1 && types.front().has(type);
      } else {
        holds = std::all_of(types.begin(), types.end(), [&](const TypeSet& ts) { return ts.has(type); });
      }
      if (holds) positions[t].push_back(static_cast<int>(pos));
    }
  }

  std::vector<std::size_t> cutting_present;
  for (std::size_t t = 0; t < 4; ++t)
    if (!positions[t].empty()) cutting_present.push_back(t);
  if (cutting_present.size() >= 2) {
    verdict.t1 = ClauseWitness{kAllTypes[cutting_present[0]], positions[cutting_present[0]], {}};
    verdict.t2 = ClauseWitness{kAllTypes[cutting_present[1]], positions[cutting_present[1]], {}};
  }
  if (!positions[4].empty()) verdict.c1 = ClauseWitness{PatternType::C1, positions[4], {}};
  if (!positions[5].empty()) verdict.c2 = ClauseWitness{PatternType::C2, positions[5], {}};

  if (verdict.t1 && verdict.t2 && verdict.c1 && verdict.c2) {
    verdict.status = VerdictStatus::guaranteed_totally_disconnected;
    verdict.reason = "every clause has a witness in the repeating cycle";
  } else if (!verdict.t1 || !verdict.t2) {
    verdict.reason = cutting_present.empty() ? "no cutting type (V, H, D1, D2) in the cycle"
                                             : "only one cutting type in the cycle";
  } else if (!verdict.c1) {
    verdict.reason = "no C1 level in the cycle";
  } else {
    verdict.reason = "no C2 level in the cycle";
  }
  return verdict;
}

std::vector<TrendPoint> diameter_trend(const SequenceSpec& spec, int max_level, const EnumerationOptions& options) {
  std::vector<TrendPoint> out;
  out.push_back(TrendPoint{});
  for (int n = 1; n <= max_level; ++n) {
    const auto sets = materialize(spec, n, options);
    const auto comps = components(sets.white(), Adjacency::corner);
    TrendPoint pt;
    pt.level = n;
    pt.width = sets.width();
    pt.components = comps.components.size();
    pt.worst_x = Rational(0);
    pt.worst_y = Rational(0);
    const auto w = static_cast<std::int64_t>(sets.width());
    for (const auto& c : comps.components) {
      pt.worst_x = std::max(pt.worst_x, Rational(static_cast<std::int64_t>(c.box.width()), w));
      pt.worst_y = std::max(pt.worst_y, Rational(static_cast<std::int64_t>(c.box.height()), w));
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace gsc
