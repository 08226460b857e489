#include "gsc/dimension.hpp"

#include <cmath>

#include "gsc/errors.hpp"

namespace gsc {

double classic_dimension(int n, int removed) {
  if (n < 2) throw PreconditionError("subdivision must be at least 2");
  if (removed < 0 || removed >= n * n) throw PreconditionError("removed count must lie in [0, n^2)");
  return std::log(static_cast<double>(n * n - removed)) / std::log(static_cast<double>(n));
}

double log_big(const BigInt& value) {
  if (value <= 0) throw PreconditionError("logarithm of a non-positive integer");
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 60) return std::log(value.convert_to<double>());
  const auto shift = bits - 52;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

DimensionEstimate estimate(const SequenceSpec& spec, int n, const EnumerationOptions& options) {
  if (n < 1) throw PreconditionError("estimate needs level >= 1");
  DimensionEstimate out;
  out.level = n;
  out.white_count = white_count(spec, n, options);
  out.width = level_width(spec, n);

  // Per-level sums keep full double precision regardless of the magnitude of the counts.
  double log_count = 0.0;
  double log_width = 0.0;
  bool symbolic = true;
  for (int k = 1; k <= n && symbolic; ++k) {
    const auto ls = level_pattern(spec, k);
    const auto applied = ls.applied();
    for (const auto* p : applied)
      if (p->white_count() != applied.front()->white_count()) symbolic = false;
    if (std::holds_alternative<ExplicitAssignment>(ls.assignment)) symbolic = false;
    log_count += std::log(static_cast<double>(applied.front()->white_count()));
    log_width += std::log(static_cast<double>(ls.m()));
  }
  if (!symbolic) {
    log_count = log_big(out.white_count);
    log_width = log_big(out.width);
  }
  out.estimate = log_count / log_width;
  return out;
}

SequenceSpec gen_dim2_example(int levels) {
  if (levels < 1) throw PreconditionError("the dim2 example needs at least one level");
  SequenceSpec spec;
  for (int k = 1; k <= levels; ++k) spec.prefix.push_back(dim2_level(k));
  spec.generator = GeneratorTag{"dim2", {}};
  return spec;
}

}  // namespace gsc
