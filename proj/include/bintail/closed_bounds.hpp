#pragma once

// Closed-form bounds on the central tail P[B(p,n) >= n/2] for odd n, obtained
// by bracketing C(2j,j) with the Stirling envelope inside the random-walk
// series and summing the result in closed form.

#include <cmath>
#include <stdexcept>
#include <string>

#include "bintail/bound_result.hpp"
#include "bintail/numeric.hpp"
#include "bintail/stirling_psi.hpp"
#include "bintail/types.hpp"

namespace bintail {

namespace detail {

// (2 sigma)^e, with (2 sigma)^0 = 1 even at sigma = 0.
inline double two_sigma_pow(const Bias& b, double e) {
  if (e == 0.0) return 1.0;
  return std::exp(0.5 * e * b.log4sigma2());
}

// 1 - (2 sigma)^e without cancellation when sigma is near 1/2.
inline double one_minus_two_sigma_pow(const Bias& b, double e) {
  if (e == 0.0) return 0.0;
  return -std::expm1(0.5 * e * b.log4sigma2());
}

inline bool in_open_half(double p) { return p > 0.0 && p < 0.5; }

}  // namespace detail

inline bool is_closed_bound(BoundKind k) {
  switch (k) {
    case BoundKind::ELEM_LB:
    case BoundKind::ELEM_UB:
    case BoundKind::EXP_FIT_LB:
    case BoundKind::CHERNLIKE_LB:
    case BoundKind::CHERNLIKE_UB:
    case BoundKind::FINITE_LB:
    case BoundKind::FINITE_UB:
      return true;
    default:
      return false;
  }
}

inline BoundResult elem_lower(TrialCount n, Bias b) {
  require_odd(n, "ELEM_LB");
  const double p = b.p();
  const double x = double(n.value());
  double value = 0.0;
  if (p != 0.5) {
    // -ln(1 - 4 sigma^2) == -2 ln|1 - 2p|
    const double neg_log = -2.0 * std::log(std::fabs(1.0 - 2.0 * p));
    value = (1.0 - 2.0 * p) * std::exp(stirling_l(n.value() + 1)) * detail::two_sigma_pow(b, x - 1.0) /
            std::sqrt(2.0 * detail::pi * (x + 1.0)) * neg_log;
  }
  return make_bound(BoundKind::ELEM_LB, value, detail::in_open_half(p));
}

inline BoundResult elem_upper(TrialCount n, Bias b) {
  require_odd(n, "ELEM_UB");
  const double p = b.p();
  const double x = double(n.value());
  const double value = detail::two_sigma_pow(b, x + 1.0) / ((1.0 - 2.0 * p) * std::sqrt(2.0 * detail::pi * (x + 1.0)));
  return make_bound(BoundKind::ELEM_UB, value, detail::in_open_half(p));
}

inline BoundResult exp_fit_lower(TrialCount n, Bias b) {
  require_odd(n, "EXP_FIT_LB");
  const double p = b.p();
  const double x = double(n.value());
  const double four_s2 = 1.0 - b.gap2();
  const double denom = (1.0 - four_s2 * std::sqrt((x + 1.0) / (x + 3.0))) * std::sqrt(2.0 * detail::pi * (x + 1.0));
  const double value =
      (1.0 - 2.0 * p) * std::exp(stirling_l(n.value() + 1)) * detail::two_sigma_pow(b, x + 1.0) / denom;
  return make_bound(BoundKind::EXP_FIT_LB, value, detail::in_open_half(p));
}

inline BoundResult chernlike_lower(TrialCount n, Bias b) {
  require_odd(n, "CHERNLIKE_LB");
  const double x = double(n.value());
  const double value =
      detail::two_sigma_pow(b, x + 1.0) * std::exp(stirling_l(n.value() + 1)) / std::sqrt(2.0 * detail::pi * (x + 1.0));
  return make_bound(BoundKind::CHERNLIKE_LB, value, b.p() <= 0.5);
}

/// (2 sigma)^{n+1} / 2; exact at p = 1/2, where it is the continuous limit.
inline BoundResult chernlike_upper(TrialCount n, Bias b) {
  require_odd(n, "CHERNLIKE_UB");
  const double value = 0.5 * detail::two_sigma_pow(b, double(n.value()) + 1.0);
  return make_bound(BoundKind::CHERNLIKE_UB, value, b.p() <= 0.5);
}

/// From the finite series. At n = 1 the series is empty and the bound is p itself.
inline BoundResult finite_lower(TrialCount n, Bias b) {
  require_odd(n, "FINITE_LB");
  const double p = b.p();
  const long nn = n.value();
  double value = p;
  if (nn >= 3) {
    const double shrink = detail::one_minus_two_sigma_pow(b, 2.0 * double(nn) - 4.0);
    value = p - 2.0 * b.sigma2() * std::exp(stirling_u(nn - 1)) * std::sqrt(shrink * psi(1, nn - 1)) / detail::sqrt_pi;
  }
  return make_bound(BoundKind::FINITE_LB, value, p < 0.5);
}

inline BoundResult finite_upper(TrialCount n, Bias b) {
  require_odd(n, "FINITE_UB");
  const double p = b.p();
  const double shrink = detail::one_minus_two_sigma_pow(b, double(n.value()) - 1.0);
  const double value = p - 2.0 * b.sigma2() * std::exp(stirling_l(2)) * std::sqrt(shrink) / detail::sqrt_pi;
  return make_bound(BoundKind::FINITE_UB, value, p < 0.5);
}

inline BoundResult eval_closed_bound(BoundKind kind, TrialCount n, Bias b) {
  switch (kind) {
    case BoundKind::ELEM_LB: return elem_lower(n, b);
    case BoundKind::ELEM_UB: return elem_upper(n, b);
    case BoundKind::EXP_FIT_LB: return exp_fit_lower(n, b);
    case BoundKind::CHERNLIKE_LB: return chernlike_lower(n, b);
    case BoundKind::CHERNLIKE_UB: return chernlike_upper(n, b);
    case BoundKind::FINITE_LB: return finite_lower(n, b);
    case BoundKind::FINITE_UB: return finite_upper(n, b);
    default:
      throw std::invalid_argument("not a closed-form bound: " + std::string(to_string(kind)));
  }
}

}  // namespace bintail
