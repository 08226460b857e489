#pragma once

#include "gsc/carpet.hpp"

namespace gsc {

struct DimensionEstimate {
  int level = 0;
  BigInt white_count;
  BigInt width;
  double estimate = 0.0;  // log(white_count) / log(width)
};

/// log(n^2 - removed) / log(n) for a self-similar carpet cutting `removed` of n^2 squares.
double classic_dimension(int n, int removed);

/// Box-counting estimate at level n from the exact white count and width.
/// Uses per-level log sums when every level has a position-free white count.
DimensionEstimate estimate(const SequenceSpec& spec, int n, const EnumerationOptions& options = {});

/// Natural logarithm of an arbitrarily large positive integer.
double log_big(const BigInt& value);

/// First `levels` levels of the dim2 family as a prefix, continued by the dim2 generator.
SequenceSpec gen_dim2_example(int levels);

}  // namespace gsc
