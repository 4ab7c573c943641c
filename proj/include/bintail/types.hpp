#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bintail {

enum class Parity { odd, even };

/// Number of coin flips, n >= 1.
class TrialCount {
 public:
  explicit TrialCount(long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("trial count must be >= 1, got " + std::to_string(n));
  }

  long value() const { return n_; }
  Parity parity() const { return n_ % 2 == 1 ? Parity::odd : Parity::even; }
  bool odd() const { return parity() == Parity::odd; }
  bool even() const { return !odd(); }

  friend bool operator==(TrialCount a, TrialCount b) { return a.n_ == b.n_; }

 private:
  long n_;
};

/// Coin bias p in [0,1] and the quantities derived from it.
class Bias {
 public:
  explicit Bias(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("bias must lie in [0,1], got " + std::to_string(p));
    }
  }

  double p() const { return p_; }
  double q() const { return 1.0 - p_; }
  double sigma2() const { return p_ * (1.0 - p_); }
  double sigma() const { return std::sqrt(sigma2()); }
  // (1-2p)^2 == 1 - 4 sigma^2
  double gap2() const { return (1.0 - 2.0 * p_) * (1.0 - 2.0 * p_); }
  // ln(4 sigma^2), computed without the cancellation in 4p(1-p) near p = 1/2.
  double log4sigma2() const { return std::log1p(-gap2()); }
  // ln(sigma^2)
  double log_sigma2() const { return std::log(p_) + std::log1p(-p_); }

  friend bool operator==(Bias a, Bias b) { return a.p_ == b.p_; }

 private:
  double p_;
};

/// The event P[B(p, n) >= n/2 + k].
///
/// Any offset whose head-count threshold ceil(n/2 + k) lies in [0, n+1] is
/// accepted, so reflected queries (see normalize_query) stay representable.
struct TailQuery {
  TailQuery(TrialCount n, long k, Bias p) : trials(n), offset_k(k), bias(p) {
    const long t = threshold();
    if (t < 0 || t > n.value() + 1) {
      throw std::invalid_argument("offset k=" + std::to_string(k) + " puts the threshold outside [0, n+1]");
    }
  }

  // Smallest head count in the event: ceil(n/2 + k).
  long threshold() const { return (trials.value() + 1) / 2 + offset_k; }

  TrialCount trials;
  long offset_k;
  Bias bias;
};

inline void require_odd(TrialCount n, const char* what) {
  if (!n.odd()) throw std::invalid_argument(std::string(what) + " needs an odd trial count, got " + std::to_string(n.value()));
}

inline void require_even(TrialCount n, const char* what) {
  if (!n.even()) throw std::invalid_argument(std::string(what) + " needs an even trial count, got " + std::to_string(n.value()));
}

}  // namespace bintail
