#include <catch_amalgamated.hpp>

#include <cmath>

#include "bintail/core_tail.hpp"
#include "bintail/normal_bounds.hpp"
#include "bintail/quadrature.hpp"

using namespace bintail;
using Catch::Approx;

TEST_CASE("standard normal") {
  CHECK(phi_cdf(0.0) == 0.5);
  CHECK(phi_pdf(0.0) == Approx(0.39894228040143267794).epsilon(1e-15));
  CHECK(phi_cdf(0.5) == Approx(0.69146246127401310364).margin(1e-14));
  CHECK(phi_cdf(1.0) == Approx(0.84134474606854294859).margin(1e-14));
  CHECK(phi_cdf(1.7321) == Approx(0.95837212039782847068).margin(1e-14));
  CHECK(phi_cdf(-1.7321) == Approx(0.04162787960217152932).margin(1e-14));
  CHECK(phi_cdf(3.0) == Approx(0.99865010196836990547).margin(1e-14));
  CHECK(phi_cdf(6.0) == Approx(0.99999999901341235496).margin(1e-14));
  CHECK(phi_cdf(8.0) == Approx(0.9999999999999993779).margin(1e-14));
  CHECK(phi_cdf(-8.0) == Approx(6.2209605742717841235e-16).epsilon(1e-12));
  for (double x = -8.0; x <= 8.0; x += 0.25) CHECK(std::fabs(phi_cdf(-x) - (1.0 - phi_cdf(x))) <= 1e-15);
}

TEST_CASE("normal sandwich pieces at n = 1, p = 1/4") {
  const NormalBoundParts parts = cont_parts(TrialCount(1), Bias(0.25));
  CHECK(parts.upsilon == Approx(0.83551191177845193).epsilon(1e-13));
  CHECK(parts.delta == Approx(0.21157109383040861).epsilon(1e-14));
  CHECK(parts.r == Approx(0.19692051811294523).epsilon(1e-14));
  CHECK(cont_lower(TrialCount(1), Bias(0.25)).value == Approx(0.23062717817585142).epsilon(1e-13));
  CHECK(cont_upper(TrialCount(1), Bias(0.25)).value == Approx(0.27218642375591679).epsilon(1e-13));
}

TEST_CASE("R takes the constant branch at tiny p") {
  CHECK(cont_parts(TrialCount(1), Bias(0.001)).r == 1.0);
  CHECK(cont_parts(TrialCount(1), Bias(0.1)).r < 1.0);
}

TEST_CASE("sandwich near the ends of the domain") {
  const NormalBoundParts tiny = cont_parts(TrialCount(1), Bias(1e-9));
  CHECK(tiny.upsilon < 1e-8);
  CHECK(tiny.delta < 1e-8);
  const double lo = cont_lower(TrialCount(1), Bias(0.4999)).value;
  const double hi = cont_upper(TrialCount(1), Bias(0.4999)).value;
  CHECK(lo <= 0.5);
  CHECK(hi >= 0.4999);
  CHECK(hi - lo <= 0.2);
}

TEST_CASE("gap at n = 9") {
  for (int i = 1; i < 100; ++i) {
    const Bias b(i * 0.005);
    const double gap = cont_upper(TrialCount(9), b).value - cont_lower(TrialCount(9), b).value;
    CHECK(gap <= 0.04);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(cont_parts(TrialCount(3), Bias(0.5)), std::domain_error);
  CHECK_THROWS_AS(cont_parts(TrialCount(3), Bias(0.0)), std::domain_error);
  CHECK_THROWS_AS(cont_parts(TrialCount(4), Bias(0.2)), std::invalid_argument);
}

TEST_CASE("Upsilon as an integral") {
  const IntegralCheck a = integral_upsilon_check(TrialCount(1), Bias(0.25));
  CHECK(a.converged);
  CHECK(a.lhs == Approx(0.83551191177845193).margin(1e-10));
  CHECK(std::fabs(a.lhs - a.rhs) <= 1e-8);
  const IntegralCheck b = integral_upsilon_check(TrialCount(5), Bias(0.4));
  CHECK(b.rhs == Approx(3.071928964196979).epsilon(1e-12));
  CHECK(std::fabs(b.lhs - b.rhs) <= 1e-8);
}

TEST_CASE("quadrature on known integrals") {
  const QuadratureResult q = integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, 10.0, 1e-14);
  CHECK(q.converged);
  CHECK(q.value == Approx(1.0 - std::exp(-10.0)).epsilon(1e-13));
  const QuadratureResult s = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
  CHECK(s.value == Approx(2.0 / 3).epsilon(1e-11));
}
