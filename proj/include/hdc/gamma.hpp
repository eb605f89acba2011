#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "hdc/errors.hpp"
#include "hdc/log_scaled.hpp"

namespace hdc {

namespace detail {

// Kahan-compensated running sum in extended precision.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double y = x - c_;
    const long double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  long double value() const { return sum_; }

 private:
  long double sum_ = 0.0L;
  long double c_ = 0.0L;
};

inline const long double kLnPi = std::log(std::numbers::pi_v<long double>);

}  // namespace detail

// Gamma(n/2) for positive integer n, evaluated by the exact half-integer
// recurrence Gamma(x+1) = x Gamma(x) starting from Gamma(1) = 1 and
// Gamma(1/2) = sqrt(pi). The factors are exact, so the only error is the
// compensated accumulation of their logs.
inline LogScaled lgamma_half(std::int64_t n) {
  if (n <= 0) throw domain_error("lgamma_half: n must be >= 1");
  detail::CompensatedSum s;
  if (n % 2 == 0) {
    // Gamma(n/2) = (n/2 - 1)!
    for (std::int64_t j = 2; j <= n / 2 - 1; ++j)
      s.add(std::log(static_cast<long double>(j)));
  } else {
    // Gamma(n/2) = sqrt(pi) * prod_{j=1}^{(n-1)/2} (j - 1/2)
    s.add(0.5L * detail::kLnPi);
    for (std::int64_t j = 1; j <= (n - 1) / 2; ++j)
      s.add(std::log(static_cast<long double>(j) - 0.5L));
  }
  return LogScaled::from_log(s.value());
}

// The coarse Gamma approximation
//   Gamma(x) ~ (x-1)^(x-1) e^-(x-1) sqrt(2 pi (x-1)),
// evaluated verbatim (no correction series). Degenerates at x <= 1.
inline LogScaled stirling_gamma(long double x) {
  if (!(x > 1.0L)) throw domain_error("stirling_gamma: requires x > 1");
  const long double m = x - 1.0L;
  const long double log_val =
      m * std::log(m) - m +
      0.5L * (std::log(2.0L * std::numbers::pi_v<long double>) + std::log(m));
  return LogScaled::from_log(log_val);
}

}  // namespace hdc
