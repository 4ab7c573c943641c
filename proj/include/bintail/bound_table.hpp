#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bintail/bound_result.hpp"
#include "bintail/classical_bounds.hpp"
#include "bintail/closed_bounds.hpp"
#include "bintail/normal_bounds.hpp"
#include "bintail/types.hpp"

namespace bintail {

/// Bound kinds defined for a given parity of the trial count.
inline std::vector<BoundKind> kinds_for(Parity parity) {
  if (parity == Parity::even) {
    return {BoundKind::CHERNOFF_EVEN, BoundKind::HOEFFDING, BoundKind::BERNSTEIN, BoundKind::SLUD_LB};
  }
  return {BoundKind::ELEM_LB,   BoundKind::ELEM_UB,   BoundKind::EXP_FIT_LB, BoundKind::CHERNLIKE_LB,
          BoundKind::CHERNLIKE_UB, BoundKind::FINITE_LB, BoundKind::FINITE_UB, BoundKind::CONT_LB,
          BoundKind::CONT_UB,   BoundKind::CHERNOFF_ODD, BoundKind::SLUD_LB};
}

inline bool kind_supports(BoundKind kind, Parity parity) {
  for (BoundKind k : kinds_for(parity)) {
    if (k == kind) return true;
  }
  return false;
}

namespace detail {

// The normal sandwich outside (0, 1/2): zero at p = 0, the continuous limits
// e^{l(n+1)}/2 and 1/2 at p = 1/2, undefined beyond. Never applicable there.
inline BoundResult cont_outside_domain(BoundKind kind, TrialCount n, Bias b) {
  double value = std::numeric_limits<double>::quiet_NaN();
  if (b.p() == 0.0) {
    value = 0.0;
  } else if (b.p() == 0.5) {
    value = kind == BoundKind::CONT_LB ? 0.5 * std::exp(stirling_l(n.value() + 1)) : 0.5;
  }
  return make_bound(kind, value, false);
}

}  // namespace detail

/// Evaluates any bound on P[B(p,n) >= n/2]. Throws if the kind is not
/// defined for the parity of n; otherwise always returns a row, marking it
/// inapplicable where the bound's hypotheses fail.
inline BoundResult eval_bound(BoundKind kind, TrialCount n, Bias b) {
  if (!kind_supports(kind, n.parity())) {
    throw std::invalid_argument(std::string(to_string(kind)) + " is not defined for " +
                                (n.odd() ? "odd" : "even") + " trial counts");
  }
  switch (kind) {
    case BoundKind::CONT_LB:
    case BoundKind::CONT_UB:
      if (!(b.p() > 0.0 && b.p() < 0.5)) return detail::cont_outside_domain(kind, n, b);
      return kind == BoundKind::CONT_LB ? cont_lower(n, b) : cont_upper(n, b);
    case BoundKind::CHERNOFF_ODD:
      if (n.value() == 1) return make_bound(kind, std::numeric_limits<double>::quiet_NaN(), false);
      return chernoff_odd(n, b);
    case BoundKind::CHERNOFF_EVEN: return chernoff_even(n, b);
    case BoundKind::HOEFFDING: return hoeffding_central(n, b);
    case BoundKind::BERNSTEIN: return bernstein_central(n, b);
    case BoundKind::SLUD_LB: return slud_central(n, b);
    default: return eval_closed_bound(kind, n, b);
  }
}

}  // namespace bintail
