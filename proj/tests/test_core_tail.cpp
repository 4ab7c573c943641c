#include <catch_amalgamated.hpp>

#include <cmath>

#include "bintail/core_tail.hpp"
#include "bintail/rational.hpp"

using namespace bintail;
using Catch::Approx;

namespace {

// Walks all 2^n outcome sequences; no binomial coefficients involved.
Rational enumerate_tail(long n, long threshold, const Rational& p) {
  const Rational q = 1 - p;
  Rational total = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    const long heads = __builtin_popcountl(mask);
    if (heads < threshold) continue;
    Rational w = 1;
    for (long i = 0; i < n; ++i) w *= (mask >> i) & 1UL ? p : q;
    total += w;
  }
  return total;
}

Rational r(long a, long b) { return make_rational(a, b); }

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("1/4") == r(1, 4));
  CHECK(parse_rational("0.25") == r(1, 4));
  CHECK(parse_rational("2.5e-1") == r(1, 4));
  CHECK(parse_rational("1") == r(1, 1));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("domain types reject out-of-range input") {
  CHECK_THROWS_AS(TrialCount(0), std::invalid_argument);
  CHECK_THROWS_AS(Bias(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(Bias(1.5), std::invalid_argument);
  CHECK_THROWS_AS(Bias(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(RationalProb(r(3, 2)), std::domain_error);
  CHECK(TailQuery(TrialCount(3), 1, Bias(0.2)).threshold() == 3);
  CHECK(TailQuery(TrialCount(3), 2, Bias(0.2)).threshold() == 4);
  CHECK_THROWS(TailQuery(TrialCount(3), 3, Bias(0.2)));
  CHECK_THROWS(TailQuery(TrialCount(3), -3, Bias(0.2)));
}

TEST_CASE("classical tail matches enumeration") {
  CHECK(exact_tail_rational(3, 0, r(1, 4)) == r(5, 32));
  CHECK(exact_tail_rational(2, 0, r(1, 4)) == r(7, 16));
  CHECK(exact_tail_rational(4, 0, r(1, 2)) == r(11, 16));
  CHECK(exact_tail_rational(3, 1, r(1, 4)) == r(1, 64));
  CHECK(exact_tail_rational(7, 2, r(1, 3)) == r(5, 729));
  for (long n = 1; n <= 12; ++n) {
    for (const Rational& p : {r(1, 7), r(1, 2), r(5, 6)}) {
      for (long t = 0; t <= n + 1; ++t) {
        const long k = t - (n + 1) / 2;
        CHECK(exact_tail_rational(n, k, p) == enumerate_tail(n, t, p));
      }
    }
  }
}

TEST_CASE("float classical tail") {
  CHECK(central_tail_classical(TrialCount(3), Bias(0.25)) == Approx(5.0 / 32).epsilon(1e-15));
  CHECK(central_tail_classical(TrialCount(1), Bias(0.37)) == Approx(0.37).epsilon(1e-15));
  CHECK(central_tail_classical(TrialCount(2), Bias(0.0)) == 0.0);
  CHECK(central_tail_classical(TrialCount(2), Bias(1.0)) == 1.0);
  CHECK(central_tail_classical(TrialCount(9), Bias(0.5)) == Approx(0.5).epsilon(1e-14));
  // moderate n stays finite and in range
  const double big = central_tail_classical(TrialCount(2001), Bias(0.45));
  CHECK(big > 0.0);
  CHECK(big < 1e-4);
}

TEST_CASE("classical tail is nondecreasing in p") {
  for (long n : {1L, 4L, 9L, 30L}) {
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double v = tail_classical(TailQuery(TrialCount(n), 0, Bias(i / 100.0)));
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
}

TEST_CASE("finite series") {
  CHECK(central_tail_finite_series(TrialCount(3), r(1, 4)) == r(5, 32));
  CHECK(central_tail_finite_series(TrialCount(1), r(2, 7)) == r(2, 7));
  CHECK(central_tail_finite_series(TrialCount(9), r(1, 2)) == r(1, 2));
  CHECK(central_tail_finite_series(TrialCount(5), r(9, 10)) == exact_tail_rational(5, 0, r(9, 10)).value());
  CHECK_THROWS_AS(central_tail_finite_series(TrialCount(4), r(1, 4)), std::invalid_argument);

  // Float path: cancellation limits accuracy to absolute 1e-12 against max(exact, p).
  for (long n = 1; n <= 51; n += 2) {
    for (int i = 1; i < 100; ++i) {
      const Rational p = r(i, 100);
      const double exact = exact_tail_rational(n, 0, p).to_double();
      const double series = central_tail_finite_series(TrialCount(n), Bias(p.get_d()));
      CHECK(std::fabs(series - exact) <= 1e-12 * std::max(exact, p.get_d()));
    }
  }
}

TEST_CASE("infinite series") {
  CHECK(central_tail_infinite_series(TrialCount(1), Bias(0.25), 1e-12) == Approx(0.25).margin(1e-12));
  CHECK(central_tail_infinite_series(TrialCount(3), Bias(0.25), 1e-12) == Approx(5.0 / 32).margin(1e-12));
  CHECK(central_tail_infinite_series(TrialCount(7), Bias(0.0), 1e-12) == 0.0);
  CHECK_THROWS_AS(central_tail_infinite_series(TrialCount(3), Bias(0.5), 1e-12), std::domain_error);
  CHECK_THROWS_AS(central_tail_infinite_series(TrialCount(3), Bias(0.7), 1e-12), std::domain_error);
  CHECK_THROWS_AS(central_tail_infinite_series(TrialCount(2), Bias(0.2), 1e-12), std::invalid_argument);
  CHECK_THROWS(central_tail_infinite_series(TrialCount(3), Bias(0.2), 0.0));
  // near p = 1/2 the tail converges slowly but still reaches tolerance
  const double v = central_tail_infinite_series(TrialCount(5), Bias(0.499), 1e-12);
  CHECK(v == Approx(central_tail_classical(TrialCount(5), Bias(0.499))).margin(1e-10));
}

TEST_CASE("parity steps") {
  // tail(5) - tail(3) at p = 1/4 is -27/512 = (-1/4) * 6 * (3/16)^2
  CHECK(step_delta_odd(TrialCount(3), r(1, 4)) == r(-27, 512));
  CHECK(step_delta_odd(TrialCount(3), Bias(0.25)) == Approx(-27.0 / 512).epsilon(1e-14));
  CHECK(even_from_odd(TrialCount(2), r(1, 4)) == r(7, 16));
  CHECK(even_from_odd(TrialCount(4), r(1, 2)) == r(11, 16));
  CHECK(even_from_odd(TrialCount(10), Bias(0.3)) ==
        Approx(central_tail_classical(TrialCount(10), Bias(0.3))).epsilon(1e-13));
  CHECK_THROWS(even_from_odd(TrialCount(3), r(1, 4)));
}

TEST_CASE("general offsets") {
  CHECK(general_tail_exact(TrialCount(3), 1, r(1, 4)) == r(1, 64));
  CHECK(general_tail_exact(TrialCount(3), 1, r(1, 2)) == r(1, 8));
  CHECK(general_tail_exact(TrialCount(5), 1, r(9, 10)) == r(45927, 50000));
  CHECK(general_tail_exact(TrialCount(7), 2, r(1, 3)) == r(5, 729));
  CHECK(general_tail_exact(TrialCount(1), 0, r(0, 1)) == 0);
  CHECK(general_tail_exact(TrialCount(1), 0, r(1, 1)) == 1);
  CHECK_THROWS(general_tail_exact(TrialCount(5), 3, r(1, 4)));
  CHECK_THROWS(general_tail_exact(TrialCount(5), -1, r(1, 4)));

  const TailQuery q(TrialCount(7), 2, Bias(0.3));
  const double exact = tail_classical(q);
  CHECK(general_tail(q) == Approx(exact).margin(1e-14));
  CHECK(general_tail(q, SeriesForm::infinite, 1e-13) == Approx(exact).margin(1e-12));

  // k = 0 reduces to the central series
  CHECK(general_tail(TailQuery(TrialCount(9), 0, Bias(0.2))) ==
        Approx(central_tail_finite_series(TrialCount(9), Bias(0.2))).margin(1e-15));

  SECTION("infinite form at p = 1/2") {
    const TruncatedSeries s = half_bias_tail_infinite(TrialCount(3), 1, 1e-3);
    CHECK(s.value == Approx(0.125).margin(1e-3));
    CHECK(s.remainder_bound <= 1e-3);
    CHECK(half_bias_tail_infinite(TrialCount(3), 0, 1e-12).value == 0.5);
    CHECK_THROWS_AS(half_bias_tail_infinite(TrialCount(3), 1, 1e-12, 1000), std::domain_error);
  }

  SECTION("remainder bounds hold") {
    for (double p : {0.05, 0.3, 0.45}) {
      for (long k = 1; k <= 4; ++k) {
        const TruncatedSeries s = general_tail_infinite(TrialCount(9), k, Bias(p), 1e-9);
        const double exact = tail_classical(TailQuery(TrialCount(9), k, Bias(p)));
        CHECK(std::fabs(s.value - exact) <= s.remainder_bound + 1e-15);
      }
    }
  }
}

TEST_CASE("reflection") {
  const NormalizedQuery nq = normalize_query(TailQuery(TrialCount(3), 0, Bias(0.7)));
  CHECK(nq.transform.complement);
  CHECK(nq.query.bias.p() == Approx(0.3));
  const double direct = tail_classical(TailQuery(TrialCount(3), 0, Bias(0.7)));
  CHECK(nq.transform.apply(tail_classical(nq.query)) == Approx(direct).epsilon(1e-14));

  // n = 5, k = 1 at p = 9/10 reflects to k = -1 at p = 1/10
  const NormalizedQuery nq5 = normalize_query(TailQuery(TrialCount(5), 1, Bias(0.9)));
  CHECK(nq5.query.offset_k == -1);
  CHECK(exact_tail_rational(5, -1, r(1, 10)) == r(4073, 50000));
  CHECK(nq5.transform.apply(exact_tail_rational(5, -1, r(1, 10)).value()) == r(45927, 50000));

  const NormalizedQuery same = normalize_query(TailQuery(TrialCount(5), 1, Bias(0.2)));
  CHECK_FALSE(same.transform.complement);
}
