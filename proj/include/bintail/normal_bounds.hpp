#pragma once

// Normal-CDF sandwich for the odd-n central tail. The infinite random-walk
// series is replaced by an integral (Upsilon) plus its first Euler-Maclaurin
// boundary term (Delta); R bounds the remaining correction.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bintail/bound_result.hpp"
#include "bintail/normal.hpp"
#include "bintail/numeric.hpp"
#include "bintail/quadrature.hpp"
#include "bintail/stirling_psi.hpp"
#include "bintail/types.hpp"

namespace bintail {

struct NormalBoundParts {
  double upsilon;
  double delta;
  double r;  // min{1, (1/(n+1) - ln(4 sigma^2)) / 4}
};

namespace detail {

inline void check_cont_domain(TrialCount n, Bias b) {
  require_odd(n, "normal sandwich");
  if (!(b.p() > 0.0 && b.p() < 0.5)) throw std::domain_error("normal sandwich needs p in (0, 1/2)");
}

}  // namespace detail

inline NormalBoundParts cont_parts(TrialCount n, Bias b) {
  detail::check_cont_domain(n, b);
  const double x = double(n.value()) + 1.0;
  const double neg_log = -b.log4sigma2();
  const double upsilon = 2.0 * phi_sf(std::sqrt(x * neg_log)) / std::sqrt(neg_log);
  const double delta = std::exp(-0.5 * x * neg_log) / std::sqrt(2.0 * detail::pi * x);
  const double r = std::min(1.0, 0.25 * (1.0 / x + neg_log));
  return {upsilon, delta, r};
}

/// (1/2 - p) e^{l(n+1)} (Upsilon + Delta)
inline BoundResult cont_lower(TrialCount n, Bias b) {
  const NormalBoundParts parts = cont_parts(n, b);
  const double value = (0.5 - b.p()) * std::exp(stirling_l(n.value() + 1)) * (parts.upsilon + parts.delta);
  return make_bound(BoundKind::CONT_LB, value, true);
}

/// (1/2 - p) (Upsilon + Delta (1 + R))
inline BoundResult cont_upper(TrialCount n, Bias b) {
  const NormalBoundParts parts = cont_parts(n, b);
  const double value = (0.5 - b.p()) * (parts.upsilon + parts.delta * (1.0 + parts.r));
  return make_bound(BoundKind::CONT_UB, value, true);
}

/// Analytic ceiling on cont_upper - cont_lower.
inline double cont_gap_bound(TrialCount n) { return 2.0 / (5.0 * (double(n.value()) + 1.0)); }

struct IntegralCheck {
  double lhs;  // quadrature of (2 sigma)^{2j} / sqrt(pi j) over [(n+1)/2, inf)
  double rhs;  // Upsilon in closed form
  double quadrature_error;
  bool converged;
};

/// Integrates (2 sigma)^{2j}/sqrt(pi j) numerically and sets it beside the
/// closed form Upsilon. The integral runs over [a, a + 60/(-ln 4 sigma^2)];
/// past that the integrand is below e^{-60} of its start and the remainder is
/// bounded analytically by e^{bL} / (sqrt(pi b) (-L)).
inline IntegralCheck integral_upsilon_check(TrialCount n, Bias b) {
  detail::check_cont_domain(n, b);
  const double log_r = b.log4sigma2();
  const double a = 0.5 * (double(n.value()) + 1.0);
  const double end = a + 60.0 / -log_r;
  auto integrand = [log_r](double j) { return std::exp(j * log_r) / std::sqrt(detail::pi * j); };
  const QuadratureResult q = integrate_adaptive(integrand, a, end, 1e-13, 1e-13);
  const double tail = std::exp(end * log_r) / (std::sqrt(detail::pi * end) * -log_r);
  return {q.value, cont_parts(n, b).upsilon, q.error_estimate + tail, q.converged};
}

}  // namespace bintail
