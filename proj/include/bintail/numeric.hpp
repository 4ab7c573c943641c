#pragma once

#include <cmath>
#include <numbers>

namespace bintail::detail {

// lgamma without touching the global signgam, so concurrent callers never share state.
inline double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

inline double log_choose(long n, long k) {
  if (k < 0 || k > n) return -INFINITY;
  return log_gamma(double(n) + 1.0) - log_gamma(double(k) + 1.0) - log_gamma(double(n - k) + 1.0);
}

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double sqrt_2pi = 2.5066282746310005024;

}  // namespace bintail::detail
