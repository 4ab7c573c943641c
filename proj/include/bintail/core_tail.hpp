#pragma once

// Exact binomial tails: the classical sum, the random-walk series forms for
// odd trial counts, the parity/reflection reductions, and arbitrary offsets.
//
// Series algorithms are templates over the scalar type so that the same code
// runs in IEEE double and, for rational biases, in exact GMP arithmetic.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "bintail/numeric.hpp"
#include "bintail/rational.hpp"
#include "bintail/types.hpp"

namespace bintail {

enum class SeriesForm { finite, infinite };

inline constexpr long default_max_series_terms = 100'000'000;

namespace detail {

template <class Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

template <class Scalar>
void check_unit(const Scalar& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("bias must lie in [0,1]");
}

template <class Scalar>
Scalar half() {
  return Scalar(1) / Scalar(2);
}

// C(n, k) * p^k in the scalar's own arithmetic; the double path goes through
// log-gamma so that n in the thousands neither overflows nor underflows early.
template <class Scalar>
Scalar choose_times_power(long n, long k, const Scalar& base, long exponent) {
  if constexpr (is_exact_v<Scalar>) {
    return Rational(binomial(n, k)) * pow(base, static_cast<unsigned long>(exponent));
  } else {
    if (base == 0.0) return exponent == 0 ? std::exp(log_choose(n, k)) : 0.0;
    return std::exp(log_choose(n, k) + double(exponent) * std::log(base));
  }
}

template <class Scalar>
Scalar finite_series(long n, const Scalar& p) {
  const Scalar s2 = p * (1 - p);
  Scalar term = 1;
  Scalar sum = 0;
  for (long j = 1; j <= (n - 1) / 2; ++j) {
    // C(2j,j) sigma^{2j} from its predecessor
    term *= s2 * Scalar(2 * (2 * j - 1)) / Scalar(j);
    sum += term;
  }
  return p - (half<Scalar>() - p) * sum;
}

template <class Scalar>
Scalar step_delta(long n, const Scalar& p) {
  const Scalar s2 = p * (1 - p);
  return (p - half<Scalar>()) * choose_times_power<Scalar>(n + 1, (n + 1) / 2, s2, (n + 1) / 2);
}

template <class Scalar>
Scalar even_step(long m, const Scalar& p) {
  const Scalar s2 = p * (1 - p);
  return finite_series<Scalar>(m - 1, p) + half<Scalar>() * choose_times_power<Scalar>(m, m / 2, s2, m / 2);
}

// Finite forms for offset k >= 0 and odd n: the p = 1/2 closed sum, and the
// telescoped sum for every other p in (0,1).
template <class Scalar>
Scalar general_finite(long n, long k, const Scalar& p) {
  if (p == 0) return Scalar(0);
  if (p == 1) return Scalar(1);
  const long last = (n - 1) / 2;
  if (p == half<Scalar>()) {
    Scalar sum = 0;
    if constexpr (is_exact_v<Scalar>) {
      for (long j = k + 1; j <= last; ++j) {
        sum += make_rational(k, 2 * j) * Rational(binomial(2 * j, j + k)) / pow(Rational(4), j);
      }
      return pow(make_rational(1, 2), 2 * k + 1) + sum;
    } else {
      for (long j = k + 1; j <= last; ++j) {
        sum += double(k) / double(2 * j) * std::exp(log_choose(2 * j, j + k) - double(j) * std::log(4.0));
      }
      return std::ldexp(1.0, int(-2 * k - 1)) + sum;
    }
  }

  const Scalar s2 = p * (1 - p);
  const Scalar ratio = p / (1 - p);
  Scalar lead;
  Scalar weight;  // (p/(1-p))^k C(2j, j+k) sigma^{2j} at j = k+1
  if constexpr (is_exact_v<Scalar>) {
    lead = pow(p, static_cast<unsigned long>(2 * k + 1));
    weight = pow(ratio, k) * Rational(binomial(2 * k + 2, 2 * k + 1)) * pow(s2, k + 1);
  } else {
    lead = std::exp(double(2 * k + 1) * std::log(p));
    weight = std::exp(double(k) * std::log(ratio) + log_choose(2 * k + 2, 2 * k + 1) + double(k + 1) * std::log(s2));
  }
  Scalar sum = 0;
  for (long j = k + 1; j <= last; ++j) {
    sum += (half<Scalar>() - p - Scalar(k) / Scalar(2 * j)) * weight;
    weight *= s2 * Scalar((2 * j + 2) * (2 * j + 1)) / Scalar((j + 1 + k) * (j + 1 - k));
  }
  return lead - sum;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical sums

/// P[B(p,n) >= n/2 + k] by direct summation, each term formed in log space.
inline double tail_classical(const TailQuery& q) {
  const long n = q.trials.value();
  const long t = q.threshold();
  const double p = q.bias.p();
  if (t <= 0) return 1.0;
  if (t > n) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;

  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(n - t + 1));
  for (long h = t; h <= n; ++h) logs.push_back(detail::log_choose(n, h) + double(h) * lp + double(n - h) * lq);
  const double top = *std::max_element(logs.begin(), logs.end());
  detail::CompensatedSum acc;
  for (double l : logs) acc.add(std::exp(l - top));
  return std::min(1.0, std::exp(top) * acc.value());
}

inline double central_tail_classical(TrialCount n, Bias p) { return tail_classical(TailQuery(n, 0, p)); }

/// Ground truth: the classical sum in exact rational arithmetic.
inline RationalProb exact_tail_rational(long n, long k, const Rational& p) {
  if (n < 0) throw std::invalid_argument("trial count must be nonnegative");
  detail::check_unit(p);
  const long t = (n + 1) / 2 + k;
  if (t <= 0) return RationalProb(Rational(1));
  if (t > n) return RationalProb(Rational(0));

  // p = a/b: sum C(n,h) a^h (b-a)^{n-h} over b^n
  const BigInt a = p.get_num();
  const BigInt b = p.get_den();
  const BigInt c = b - a;
  BigInt num = 0;
  for (long h = t; h <= n; ++h) {
    BigInt ah, ch;
    mpz_pow_ui(ah.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(h));
    mpz_pow_ui(ch.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - h));
    num += binomial(n, h) * ah * ch;
  }
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
  return RationalProb(Rational(num, den));
}

inline Rational central_tail_classical(TrialCount n, const Rational& p) {
  return exact_tail_rational(n.value(), 0, p).value();
}

// ---------------------------------------------------------------------------
// Random-walk forms

/// p - (1/2 - p) * sum_{j=1}^{(n-1)/2} C(2j,j) sigma^{2j}; valid for every p in [0,1].
inline double central_tail_finite_series(TrialCount n, Bias p) {
  require_odd(n, "central_tail_finite_series");
  return detail::finite_series<double>(n.value(), p.p());
}

inline Rational central_tail_finite_series(TrialCount n, const Rational& p) {
  require_odd(n, "central_tail_finite_series");
  detail::check_unit(p);
  return detail::finite_series<Rational>(n.value(), p);
}

/// (1/2 - p) * sum_{j >= (n+1)/2} C(2j,j) sigma^{2j}, truncated once the
/// geometric majorant of the omitted remainder (term ratio < 4 sigma^2) drops below tol.
inline double central_tail_infinite_series(TrialCount n, Bias b, double tol,
                                           long max_terms = default_max_series_terms) {
  require_odd(n, "central_tail_infinite_series");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(b.p() < 0.5)) throw std::domain_error("infinite series diverges for p >= 1/2");
  if (b.p() == 0.0) return 0.0;

  const double p = b.p();
  const double s2 = b.sigma2();
  const double r = 4.0 * s2;
  const double one_minus_r = b.gap2();
  const double coef = 0.5 - p;
  const long first = (n.value() + 1) / 2;

  double term = std::exp(detail::log_choose(2 * first, first) + double(first) * b.log_sigma2());
  detail::CompensatedSum sum;
  for (long j = first;; ++j) {
    sum.add(term);
    if (coef * term * r / one_minus_r < tol) break;
    if (j - first >= max_terms) throw std::domain_error("infinite series: tolerance not reached within term budget");
    term *= s2 * double(2 * (2 * j + 1)) / double(j + 1);
  }
  return coef * sum.value();
}

/// Change in the central tail when two trials are added to an odd count:
/// (p - 1/2) C(n+1, (n+1)/2) sigma^{n+1}.
inline double step_delta_odd(TrialCount n, Bias p) {
  require_odd(n, "step_delta_odd");
  return detail::step_delta<double>(n.value(), p.p());
}

inline Rational step_delta_odd(TrialCount n, const Rational& p) {
  require_odd(n, "step_delta_odd");
  detail::check_unit(p);
  return detail::step_delta<Rational>(n.value(), p);
}

/// Even-count central tail from the odd count below it:
/// P[B(p,m) >= m/2] = P[B(p,m-1) >= (m-1)/2] + C(m,m/2) sigma^m / 2.
inline double even_from_odd(TrialCount m, Bias p) {
  require_even(m, "even_from_odd");
  return detail::even_step<double>(m.value(), p.p());
}

inline Rational even_from_odd(TrialCount m, const Rational& p) {
  require_even(m, "even_from_odd");
  detail::check_unit(p);
  return detail::even_step<Rational>(m.value(), p);
}

// ---------------------------------------------------------------------------
// Arbitrary offsets (odd n, 0 <= k < n/2)

struct TruncatedSeries {
  double value;
  double remainder_bound;
  long terms;
};

namespace detail {

inline void check_general(TrialCount n, long k) {
  require_odd(n, "general_tail");
  if (k < 0 || 2 * k >= n.value()) {
    throw std::invalid_argument("general_tail needs 0 <= k < n/2, got k=" + std::to_string(k));
  }
}

}  // namespace detail

/// Infinite form for p < 1/2:
/// (p/(1-p))^k sum_{j >= (n+1)/2} (1/2 - p - k/(2j)) C(2j, j+k) sigma^{2j}.
///
/// |1/2 - p - k/(2j)| <= 1/2 and C(2j, j+k) <= C(2j, j), so the remainder
/// after term J is at most (p/(1-p))^k C(2J,J) sigma^{2J} (r/(1-r)) / 2 with r = 4 sigma^2.
inline TruncatedSeries general_tail_infinite(TrialCount n, long k, Bias b, double tol,
                                             long max_terms = default_max_series_terms) {
  detail::check_general(n, k);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(b.p() < 0.5)) throw std::domain_error("infinite series needs p < 1/2");
  if (b.p() == 0.0) return {0.0, 0.0, 0};

  const double p = b.p();
  const double s2 = b.sigma2();
  const double r = 4.0 * s2;
  const double geometric = r / b.gap2();
  const double log_ratio = std::log(p) - std::log1p(-p);
  const long first = (n.value() + 1) / 2;

  const double shift = double(k) * log_ratio + double(first) * b.log_sigma2();
  double weight = std::exp(detail::log_choose(2 * first, first + k) + shift);
  double central = std::exp(detail::log_choose(2 * first, first) + shift);
  detail::CompensatedSum sum;
  long terms = 0;
  for (long j = first;; ++j) {
    sum.add((0.5 - p - double(k) / double(2 * j)) * weight);
    ++terms;
    const double bound = 0.5 * central * geometric;
    if (bound < tol) return {sum.value(), bound, terms};
    if (terms >= max_terms) throw std::domain_error("general_tail: tolerance not reached within term budget");
    weight *= s2 * double((2 * j + 2) * (2 * j + 1)) / double((j + 1 + k) * (j + 1 - k));
    central *= s2 * double(2 * (2 * j + 1)) / double(j + 1);
  }
}

/// Infinite form at p = 1/2: 1/2 - sum_{j >= (n+1)/2} (k/(2j)) C(2j, j+k) 4^{-j}.
///
/// Terms are at most k / (2 j sqrt(pi j)), so the remainder past J is below
/// k / sqrt(pi J); convergence is slow and the term budget caps the work.
inline TruncatedSeries half_bias_tail_infinite(TrialCount n, long k, double tol,
                                               long max_terms = default_max_series_terms) {
  detail::check_general(n, k);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (k == 0) return {0.5, 0.0, 0};

  const long first = (n.value() + 1) / 2;
  const double needed = double(k) * double(k) / (detail::pi * tol * tol);
  if (needed - double(first) > double(max_terms)) {
    throw std::domain_error("half_bias_tail_infinite: tolerance needs more terms than the budget");
  }
  const long last = std::max(first, static_cast<long>(std::ceil(needed)));
  double term = std::exp(detail::log_choose(2 * first, first + k) - double(first) * std::log(4.0));
  detail::CompensatedSum sum;
  for (long j = first; j <= last; ++j) {
    sum.add(double(k) / double(2 * j) * term);
    term *= 0.25 * double((2 * j + 2) * (2 * j + 1)) / double((j + 1 + k) * (j + 1 - k));
  }
  return {0.5 - sum.value(), double(k) / std::sqrt(detail::pi * double(last)), last - first + 1};
}

/// P[B(p,n) >= n/2 + k] through the random-walk forms.
inline double general_tail(const TailQuery& q, SeriesForm form = SeriesForm::finite, double tol = 1e-12) {
  detail::check_general(q.trials, q.offset_k);
  const double p = q.bias.p();
  if (form == SeriesForm::finite) return detail::general_finite<double>(q.trials.value(), q.offset_k, p);
  if (p == 0.5) return half_bias_tail_infinite(q.trials, q.offset_k, tol).value;
  return general_tail_infinite(q.trials, q.offset_k, q.bias, tol).value;
}

inline Rational general_tail_exact(TrialCount n, long k, const Rational& p) {
  detail::check_general(n, k);
  detail::check_unit(p);
  return detail::general_finite<Rational>(n.value(), k, p);
}

// ---------------------------------------------------------------------------
// Reflection

/// Maps the answer of a canonical query back to the original one.
struct TailTransform {
  bool complement = false;

  double apply(double x) const { return complement ? 1.0 - x : x; }
  Rational apply(const Rational& x) const { return complement ? Rational(1 - x) : x; }
};

struct NormalizedQuery {
  TailQuery query;
  TailTransform transform;
};

/// Rewrites the query to bias <= 1/2:
/// P[B(p,n) >= t] = 1 - P[B(1-p,n) >= n + 1 - t].
inline NormalizedQuery normalize_query(const TailQuery& q) {
  if (q.bias.p() <= 0.5) return {q, {}};
  const long n = q.trials.value();
  const long reflected_threshold = n + 1 - q.threshold();
  const long k = reflected_threshold - (n + 1) / 2;
  return {TailQuery(q.trials, k, Bias(1.0 - q.bias.p())), {true}};
}

}  // namespace bintail
