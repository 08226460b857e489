#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "gsc/dimension.hpp"
#include "gsc/errors.hpp"

using namespace gsc;

TEST_CASE("classic carpet") {
  const auto spec = load_fixture("classic.json");
  const double expected = std::log(8.0) / std::log(3.0);
  CHECK(classic_dimension(3, 1) == doctest::Approx(expected).epsilon(1e-15));
  for (int n = 1; n <= 8; ++n) {
    const auto e = estimate(spec, n);
    CHECK(std::abs(e.estimate - expected) < 1e-12);
    CHECK(e.white_count == boost::multiprecision::pow(BigInt(8), n));
  }
  CHECK_THROWS_AS(classic_dimension(3, 9), PreconditionError);
}

TEST_CASE("dimension-2 example") {
  const auto spec = gen_dim2_example(2);
  double previous = 0.0;
  BigInt fact_n = 1, fact_n1 = 1;
  for (int n = 1; n <= 8; ++n) {
    fact_n *= n;
    fact_n1 *= n + 1;
    const auto e = estimate(spec, n);
    CHECK(e.white_count == fact_n * fact_n1);
    CHECK(e.width == fact_n1);
    const double formula = 1.0 + std::log(fact_n.convert_to<double>()) / std::log(fact_n1.convert_to<double>());
    CHECK(std::abs(e.estimate - formula) < 1e-9);
    CHECK(e.estimate > previous);
    previous = e.estimate;
  }
  CHECK(estimate(spec, 6).estimate > 1.75);
}

TEST_CASE("logarithms of large integers") {
  CHECK(log_big(BigInt(1)) == 0.0);
  const BigInt big = boost::multiprecision::pow(BigInt(10), 400);
  CHECK(log_big(big) == doctest::Approx(400 * std::log(10.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_big(BigInt(0)), PreconditionError);
}

TEST_CASE("position-dependent counts fall back to enumeration") {
  SequenceSpec spec;
  spec.prefix.push_back({{patterns::classic(), patterns::left_column_black(3)}, CyclicAssignment{}});
  spec.prefix.push_back({{patterns::classic(), patterns::left_column_black(3)}, CyclicAssignment{}});
  const auto e = estimate(spec, 2);
  // Level 2 alternates over 8 parents: ranks 0, 2, 4, 6 classic (8 cells), the rest left column (6).
  CHECK(e.white_count == 4 * 8 + 4 * 6);
  CHECK(e.estimate == doctest::Approx(std::log(e.white_count.convert_to<double>()) / std::log(9.0)));
}
