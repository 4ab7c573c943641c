#pragma once

// Classical central-tail bounds (Chernoff, Hoeffding, Bernstein, Slud), the
// Chernoff comparison ratios, and the widened bias range for central Slud.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bintail/bound_result.hpp"
#include "bintail/closed_bounds.hpp"
#include "bintail/normal.hpp"
#include "bintail/numeric.hpp"
#include "bintail/stirling_psi.hpp"
#include "bintail/types.hpp"

namespace bintail {

/// (2 sigma)^m for even m.
inline BoundResult chernoff_even(TrialCount m, Bias b) {
  require_even(m, "chernoff_even");
  return make_bound(BoundKind::CHERNOFF_EVEN, detail::two_sigma_pow(b, double(m.value())), true);
}

/// Moment bound on P[B(p,n) >= (n+1)/2] for odd n >= 3:
/// (2 sigma)^n sqrt(p/(1-p)) (n^2/(n^2-1))^{n/2} sqrt((n-1)/(n+1)).
/// The optimal exponent is positive only while np <= (n+1)/2, which is when it is applicable.
inline BoundResult chernoff_odd(TrialCount n, Bias b) {
  require_odd(n, "chernoff_odd");
  if (n.value() == 1) throw std::invalid_argument("chernoff_odd is singular at n = 1");
  const double x = double(n.value());
  const double p = b.p();
  double value = 0.0;
  if (p == 1.0) {
    value = std::numeric_limits<double>::quiet_NaN();
  } else if (p > 0.0) {
    const double log_value = 0.5 * x * b.log4sigma2() + 0.5 * (std::log(p) - std::log1p(-p)) +
                             0.5 * x * std::log(x * x / (x * x - 1.0)) + 0.5 * std::log((x - 1.0) / (x + 1.0));
    value = std::exp(log_value);
  }
  return make_bound(BoundKind::CHERNOFF_ODD, value, p * x <= 0.5 * (x + 1.0));
}

inline BoundResult hoeffding_central(TrialCount m, Bias b) {
  require_even(m, "hoeffding_central");
  const double value = std::exp(-double(m.value()) * b.gap2() / 2.0);
  return make_bound(BoundKind::HOEFFDING, value, b.p() <= 0.5);
}

inline BoundResult bernstein_central(TrialCount m, Bias b) {
  require_even(m, "bernstein_central");
  const double p = b.p();
  const double d = 0.5 - p;
  const double value = std::exp(-3.0 * double(m.value()) * d * d / ((1.0 + 4.0 * p) * (1.0 - p)));
  return make_bound(BoundKind::BERNSTEIN, value, p <= 0.5);
}

/// 1 - Phi((k - np) / (sigma sqrt(n))) for any real threshold k. Only
/// integer thresholds give a valid bound; this raw form exists to show why.
inline double slud_expression(long n, double k, Bias b) {
  const double mean = double(n) * b.p();
  const double sd = b.sigma() * std::sqrt(double(n));
  if (sd == 0.0) return k < mean ? 1.0 : (k > mean ? 0.0 : 0.5);
  return phi_sf((k - mean) / sd);
}

/// Slud's lower bound on P[B(p,n) >= ceil(n/2 + k)]; applicable under
/// (a) p <= 1/4 and np <= k_abs <= n, or (b) np <= k_abs <= n(1-p).
inline BoundResult slud_lower(const TailQuery& q) {
  const long n = q.trials.value();
  const double k_abs = double(q.threshold());
  const double p = q.bias.p();
  const double mean = double(n) * p;
  const bool cond_a = p <= 0.25 && mean <= k_abs && k_abs <= double(n);
  const bool cond_b = mean <= k_abs && k_abs <= double(n) * (1.0 - p);
  return make_bound(BoundKind::SLUD_LB, slud_expression(n, k_abs, q.bias), cond_a || cond_b);
}

/// Largest bias for which the central Slud bound is established:
/// odd n:  1/2 + (1/2) (1 - 4(sqrt(n(n+1)) - 1)/(4n+2))^{1/2}
/// even m: 1/2 + (1/6) (e^{l(m)}/m)^{1/3}
inline double slud_extended_threshold(TrialCount trials) {
  const double x = double(trials.value());
  if (trials.odd()) {
    return 0.5 + 0.5 * std::sqrt(1.0 - 4.0 * (std::sqrt(x * (x + 1.0)) - 1.0) / (4.0 * x + 2.0));
  }
  return 0.5 + std::cbrt(std::exp(stirling_l(trials.value())) / x) / 6.0;
}

/// Central Slud bound, applicable on the classical conditions or anywhere up
/// to the extended threshold.
inline BoundResult slud_central(TrialCount trials, Bias b) {
  BoundResult r = slud_lower(TailQuery(trials, 0, b));
  r.applicable = r.applicable || b.p() <= slud_extended_threshold(trials);
  return r;
}

enum class ChernoffRegime { over_quarter, under_quarter };

namespace detail {

inline void check_ratio_args(TrialCount n, Bias b) {
  require_odd(n, "chernoff_ratio");
  if (n.value() < 3) throw std::invalid_argument("chernoff_ratio needs n >= 3");
  if (!(b.p() > 0.0 && b.p() < 1.0)) throw std::domain_error("chernoff_ratio needs p in (0,1)");
}

inline double odd_chernoff_factor(double x) {
  return std::pow(x * x / (x * x - 1.0), x / 2.0);
}

}  // namespace detail

/// chernoff_odd divided by CHERNLIKE_UB (over_quarter) or by ELEM_UB (under_quarter), in closed form:
///   over:  (1/(1-p)) (n^2/(n^2-1))^{n/2} sqrt((n-1)/(n+1))
///   under: (1-2p) sqrt(pi (n-1)) / ((1-p) sqrt 2) (n^2/(n^2-1))^{n/2}
inline double chernoff_ratio(TrialCount n, Bias b, ChernoffRegime regime) {
  detail::check_ratio_args(n, b);
  const double x = double(n.value());
  const double p = b.p();
  if (regime == ChernoffRegime::over_quarter) {
    return detail::odd_chernoff_factor(x) * std::sqrt((x - 1.0) / (x + 1.0)) / (1.0 - p);
  }
  return (1.0 - 2.0 * p) * std::sqrt(detail::pi * (x - 1.0)) / ((1.0 - p) * std::numbers::sqrt2) *
         detail::odd_chernoff_factor(x);
}

/// The over-quarter ratio written with sqrt(1/(1-p)) in place of 1/(1-p).
/// It dips below 1 at small n (0.974 at n = 3, p = 1/4); reported next to
/// chernoff_ratio, never used for the regime claim.
inline double chernoff_ratio_displayed(TrialCount n, Bias b) {
  detail::check_ratio_args(n, b);
  const double x = double(n.value());
  return std::sqrt(1.0 / (1.0 - b.p())) * detail::odd_chernoff_factor(x) * std::sqrt((x - 1.0) / (x + 1.0));
}

/// Lower bound on the multiplicative slack of the even Chernoff bound: (1/2 + (2 pi m)^{-1/2})^{-1}.
inline double chernoff_mult_error(TrialCount m) {
  require_even(m, "chernoff_mult_error");
  return 1.0 / (0.5 + 1.0 / std::sqrt(2.0 * detail::pi * double(m.value())));
}

/// (2 sigma)^m (1/2 + (2 pi m)^{-1/2}), an upper bound on the even central tail for p <= 1/2.
inline double chernoff_mult_envelope(TrialCount m, Bias b) {
  return chernoff_even(m, b).value / chernoff_mult_error(m);
}

}  // namespace bintail
