#include <catch_amalgamated.hpp>

#include <cmath>

#include "bintail/bound_table.hpp"
#include "bintail/core_tail.hpp"

using namespace bintail;
using Catch::Approx;

TEST_CASE("bound kinds round-trip through their names") {
  for (BoundKind k : all_bound_kinds) CHECK(parse_bound_kind(to_string(k)) == k);
  CHECK_FALSE(parse_bound_kind("FOO").has_value());
  CHECK(side_of(BoundKind::ELEM_LB) == Side::lower);
  CHECK(side_of(BoundKind::CHERNOFF_ODD) == Side::upper);
}

TEST_CASE("closed bounds at n = 1, p = 1/4") {
  const TrialCount n(1);
  const Bias b(0.25);
  CHECK(chernlike_upper(n, b).value == Approx(0.375).epsilon(1e-15));
  CHECK(chernlike_lower(n, b).value == Approx(0.18639990943339793).epsilon(1e-14));
  CHECK(finite_lower(n, b).value == 0.25);
  CHECK(finite_upper(n, b).value == Approx(0.25).margin(1e-15));
  for (BoundKind k : kinds_for(Parity::odd)) {
    const BoundResult r = eval_bound(k, n, b);
    if (!r.applicable) continue;
    CHECK_FALSE(violates(r, 0.25));
  }
}

TEST_CASE("domains and parity") {
  CHECK_THROWS_AS(elem_lower(TrialCount(2), Bias(0.2)), std::invalid_argument);
  CHECK_THROWS_AS(eval_bound(BoundKind::HOEFFDING, TrialCount(3), Bias(0.2)), std::invalid_argument);
  CHECK_THROWS_AS(eval_bound(BoundKind::ELEM_UB, TrialCount(4), Bias(0.2)), std::invalid_argument);
  CHECK_FALSE(elem_upper(TrialCount(3), Bias(0.6)).applicable);
  CHECK_FALSE(finite_lower(TrialCount(3), Bias(0.5)).applicable);
  CHECK(chernlike_upper(TrialCount(3), Bias(0.5)).applicable);
  CHECK(chernlike_upper(TrialCount(3), Bias(0.5)).value == Approx(0.5));
  CHECK_FALSE(eval_bound(BoundKind::CONT_LB, TrialCount(3), Bias(0.7)).applicable);
}

TEST_CASE("elementary upper bound blows up near one half") {
  const double a = elem_upper(TrialCount(1), Bias(0.49)).value;
  const double b = elem_upper(TrialCount(1), Bias(0.4999)).value;
  CHECK(b > 10 * a);
  CHECK(elem_upper(TrialCount(1), Bias(0.4999)).vacuous);
}

TEST_CASE("finite upper bound becomes exact near one half") {
  CHECK(finite_upper(TrialCount(3), Bias(0.4999999)).value == Approx(0.5).margin(1e-4));
}

TEST_CASE("Chernoff-like lower bound keeps its size at one half") {
  for (long n = 1; n <= 99; n += 2) {
    const double floor = 0.9 * std::exp(stirling_l(n + 1)) / std::sqrt(2.0 * detail::pi * (n + 1));
    CHECK(chernlike_lower(TrialCount(n), Bias(0.499)).value > floor);
  }
}

TEST_CASE("exponential fit dominates the elementary lower bound for large n") {
  for (long n = 101; n <= 301; n += 50) {
    for (int i = 1; i < 100; ++i) {
      const Bias b(i * 0.005);
      CHECK(exp_fit_lower(TrialCount(n), b).value >= elem_lower(TrialCount(n), b).value);
    }
  }
}

TEST_CASE("vacuous flag") {
  CHECK(make_bound(BoundKind::ELEM_UB, 1.5, true).vacuous);
  CHECK(make_bound(BoundKind::FINITE_LB, -0.1, true).vacuous);
  CHECK_FALSE(make_bound(BoundKind::FINITE_LB, 0.1, true).vacuous);
  // an inapplicable bound never counts as a violation
  CHECK_FALSE(violates(make_bound(BoundKind::ELEM_UB, 0.0, false), 0.5));
  CHECK(violates(make_bound(BoundKind::ELEM_UB, 0.4, true), 0.5));
}
