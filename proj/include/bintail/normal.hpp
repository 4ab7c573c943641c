#pragma once

#include <cmath>
#include <numbers>

#include "bintail/numeric.hpp"

namespace bintail {

inline double phi_pdf(double x) { return std::exp(-0.5 * x * x) / detail::sqrt_2pi; }

// Both tails go through erfc so neither side loses digits to 1 - Phi cancellation.
inline double phi_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

/// 1 - Phi(x).
inline double phi_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

}  // namespace bintail
