#pragma once

#include <cmath>
#include <cstdint>

#include "hdc/ball.hpp"
#include "hdc/errors.hpp"
#include "hdc/log_scaled.hpp"

namespace hdc {

// The side-2 box in R^N holds 2^N inscribed unit balls; a central ball
// osculates them all. Radius of that central ball: sqrt(N) - 1, the
// simplified form of sqrt(N + 1 - 2 sqrt(N)).
inline double inner_radius(std::int64_t n) {
  if (n < 2) throw domain_error("inner_radius: construction needs N >= 2");
  return std::sqrt(static_cast<double>(n)) - 1.0;
}

// Volume of the central ball over the box volume:
//   R_N = (sqrt(N)-1)^N * Omega_N / 2^N.
inline LogScaled leakage_ratio(std::int64_t n) {
  if (n < 2) throw domain_error("leakage_ratio: construction needs N >= 2");
  const long double rho =
      std::sqrt(static_cast<long double>(n)) - 1.0L;
  return LogScaled::from_log(n * std::log(rho) + ball_volume(n).log_mag() -
                             n * detail::kLn2);
}

struct LeakageReport {
  std::int64_t dimension = 0;
  double inner_radius = 0.0;
  LogScaled ratio;
  bool leaks = false;
};

inline LeakageReport leakage_report(std::int64_t n) {
  LeakageReport r;
  r.dimension = n;
  r.inner_radius = inner_radius(n);
  r.ratio = leakage_ratio(n);
  r.leaks = r.inner_radius > 1.0;
  return r;
}

// Least N >= 2 whose central ball pokes out of the box (radius > 1; the
// osculating case N = 4, radius exactly 1, does not leak).
inline std::int64_t first_leak_dimension() {
  for (std::int64_t n = 2;; ++n)
    if (inner_radius(n) > 1.0) return n;
}

// Least N >= 2 with R_N > threshold; terminates because R_N diverges.
inline std::int64_t first_ratio_exceeding(double threshold) {
  if (!(threshold > 0))
    throw domain_error("first_ratio_exceeding: threshold must be > 0");
  const LogScaled t = LogScaled::from_double(threshold);
  for (std::int64_t n = 2;; ++n)
    if (leakage_ratio(n) > t) return n;
}

// The asymptotic envelope (pi e/2)^(N/2) * N^(-1/2) * e^(1/2)/sqrt(pi),
// evaluated verbatim. It carries the right exponential rate; the true ratio
// R_N / envelope decays like e^(-sqrt(N)-1), which the acceptance suite
// records.
inline LogScaled growth_envelope(std::int64_t n) {
  if (n < 3) throw domain_error("growth_envelope: N must be >= 3");
  const long double base = std::log(detail::kPi) + 1.0L - detail::kLn2;
  const long double log_val = 0.5L * n * base -
                              0.5L * std::log(static_cast<long double>(n)) +
                              0.5L - 0.5L * std::log(detail::kPi);
  return LogScaled::from_log(log_val);
}

}  // namespace hdc
