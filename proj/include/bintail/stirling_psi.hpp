#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "bintail/numeric.hpp"
#include "bintail/rational.hpp"

namespace bintail {

// Stirling correction exponents: for the factorial bracket
//   sqrt(2 pi n)(n/e)^n e^{1/(12n+1)} < n! < sqrt(2 pi n)(n/e)^n e^{1/(12n)}
// they bound ln C(n, n/2) - ln(2^n sqrt(2/(pi n))) from below and above.

inline double stirling_l(long n) {
  if (n < 1) throw std::invalid_argument("stirling_l needs n >= 1");
  const double x = double(n);
  return -(9.0 * x + 1.0) / (3.0 * x * (12.0 * x + 1.0));
}

inline double stirling_u(long n) {
  if (n < 1) throw std::invalid_argument("stirling_u needs n >= 1");
  const double x = double(n);
  return -(18.0 * x - 1.0) / (12.0 * x * (6.0 * x + 1.0));
}

inline BigInt central_binom(long j) {
  if (j < 0) throw std::invalid_argument("central_binom needs j >= 0");
  return binomial(static_cast<unsigned long>(2 * j), static_cast<unsigned long>(j));
}

/// 4^j e^{l(2j)} / sqrt(pi j) < C(2j, j) < 4^j e^{u(2j)} / sqrt(pi j).
///
/// The linear fields overflow to +inf once j passes roughly 510; the log
/// fields stay finite.
struct StirlingEnvelope {
  long j;
  double lower;
  double upper;
  double log_lower;
  double log_upper;
};

inline StirlingEnvelope central_binom_envelope(long j) {
  if (j < 1) throw std::invalid_argument("central_binom_envelope needs j >= 1");
  const double base = double(j) * std::log(4.0) - 0.5 * std::log(detail::pi * double(j));
  const double log_lower = base + stirling_l(2 * j);
  const double log_upper = base + stirling_u(2 * j);
  return {j, std::exp(log_lower), std::exp(log_upper), log_lower, log_upper};
}

/// psi_eta(k) = sum_{j=eta}^{k-eta} 1/sqrt(j (k-j)).
///
/// The summand is symmetric under j <-> k-j, so each mirrored pair is added
/// once with weight two, and the middle term (k even) once.
inline double psi(long eta, long k) {
  if (eta < 1 || 2 * eta > k) {
    throw std::invalid_argument("psi needs 1 <= eta and 2*eta <= k, got eta=" + std::to_string(eta) +
                                " k=" + std::to_string(k));
  }
  detail::CompensatedSum sum;
  long j = eta;
  for (; 2 * j < k; ++j) sum.add(2.0 / std::sqrt(double(j) * double(k - j)));
  if (2 * j == k) sum.add(1.0 / double(j));
  return sum.value();
}

}  // namespace bintail
