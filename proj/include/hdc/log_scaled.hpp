#pragma once

#include <cmath>
#include <compare>
#include <cstdio>
#include <limits>
#include <string>

#include "hdc/errors.hpp"

namespace hdc {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(double v) {
  if (v > 0) return Sign::positive;
  if (v < 0) return Sign::negative;
  return Sign::zero;
}

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

// A real number stored as sign plus natural log of magnitude, so products,
// quotients and powers of astronomically large/small quantities never leave
// floating-point range. The log is kept in 80-bit extended precision: a plain
// double cannot represent ln|x| accurately enough for a 1-ulp round trip near
// the ends of double range, nor hold ln Gamma(5000) ~ 3.8e4 to 1e-12 absolute.
class LogScaled {
 public:
  constexpr LogScaled() = default;  // zero

  static LogScaled from_log(long double log_mag, Sign sign = Sign::positive) {
    LogScaled v;
    v.sign_ = sign;
    v.log_mag_ = (sign == Sign::zero) ? 0.0L : log_mag;
    return v;
  }

  static LogScaled from_double(double x) {
    if (std::isnan(x) || std::isinf(x))
      throw domain_error("LogScaled: non-finite input");
    if (x == 0.0) return LogScaled{};
    return from_log(std::log(std::fabs(static_cast<long double>(x))),
                    x > 0 ? Sign::positive : Sign::negative);
  }

  Sign sign() const { return sign_; }
  bool is_zero() const { return sign_ == Sign::zero; }
  bool is_positive() const { return sign_ == Sign::positive; }
  long double log_mag() const { return log_mag_; }

  struct Converted {
    double value = 0.0;
    bool underflow = false;  // nonzero value rounded to 0
    bool overflow = false;   // magnitude beyond double range
  };

  // Conversion that distinguishes "tiny" from "lost": a value whose magnitude
  // rounds to 0 (or overflows) comes back flagged, never silently.
  Converted to_double_checked() const {
    Converted r;
    if (is_zero()) return r;
    const double s = sign_ == Sign::positive ? 1.0 : -1.0;
    if (log_mag_ > 710.0L) {
      r.value = s * std::numeric_limits<double>::infinity();
      r.overflow = true;
      return r;
    }
    if (log_mag_ < -746.0L) {
      r.value = 0.0;
      r.underflow = true;
      return r;
    }
    const double mag = static_cast<double>(std::exp(log_mag_));
    r.value = s * mag;
    r.underflow = (mag == 0.0);
    r.overflow = std::isinf(mag);
    return r;
  }

  // Best-effort double (0 or +-inf on saturation). Use the checked form when
  // underflow must be told apart from a true zero.
  double to_double() const { return to_double_checked().value; }

  // Scientific rendering straight from the log, valid far outside double
  // range, e.g. "2.368e-40" or "-1.05e+12345". `sig_digits` counts mantissa
  // digits.
  std::string sci_string(int sig_digits = 10) const {
    if (sig_digits < 1) sig_digits = 1;
    if (sig_digits > 17) sig_digits = 17;
    if (is_zero()) return "0";
    static const long double kLn10 = std::log(10.0L);
    const long double l10 = log_mag_ / kLn10;
    long long e10 = static_cast<long long>(std::floor(l10));
    double mant = static_cast<double>(std::exp((l10 - e10) * kLn10));
    // Guard the half-open mantissa range against rounding at the seams.
    if (mant >= 10.0) {
      mant /= 10.0;
      ++e10;
    } else if (mant < 1.0) {
      mant *= 10.0;
      --e10;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", sig_digits - 1, mant);
    // "%.*f" may round 9.99... up to 10.00...
    if (buf[0] == '1' && buf[1] == '0') {
      ++e10;
      std::snprintf(buf, sizeof buf, "%.*f", sig_digits - 1, 1.0);
    }
    std::string out;
    if (sign_ == Sign::negative) out += '-';
    out += buf;
    out += 'e';
    out += (e10 < 0) ? '-' : '+';
    out += std::to_string(e10 < 0 ? -e10 : e10);
    return out;
  }

  friend LogScaled operator*(const LogScaled& a, const LogScaled& b) {
    const Sign s = a.sign_ * b.sign_;
    if (s == Sign::zero) return LogScaled{};
    return from_log(a.log_mag_ + b.log_mag_, s);
  }

  friend LogScaled operator/(const LogScaled& a, const LogScaled& b) {
    if (b.is_zero()) throw domain_error("LogScaled: division by zero");
    if (a.is_zero()) return LogScaled{};
    return from_log(a.log_mag_ - b.log_mag_, a.sign_ * b.sign_);
  }

  // x^e for real e. Negative bases are allowed only with integer exponents.
  friend LogScaled pow(const LogScaled& x, long double e) {
    if (x.is_zero()) {
      if (e > 0) return LogScaled{};
      throw domain_error("LogScaled: 0 raised to non-positive power");
    }
    if (x.sign_ == Sign::negative) {
      if (e != std::floor(e))
        throw domain_error("LogScaled: negative base with fractional power");
      const bool odd = std::fmod(e, 2.0L) != 0.0L;
      return from_log(x.log_mag_ * e, odd ? Sign::negative : Sign::positive);
    }
    return from_log(x.log_mag_ * e, Sign::positive);
  }

  friend std::strong_ordering operator<=>(const LogScaled& a,
                                          const LogScaled& b) {
    const int sa = static_cast<int>(a.sign_);
    const int sb = static_cast<int>(b.sign_);
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    if (a.log_mag_ == b.log_mag_) return std::strong_ordering::equal;
    const bool mag_less = a.log_mag_ < b.log_mag_;
    if (sa > 0)
      return mag_less ? std::strong_ordering::less
                      : std::strong_ordering::greater;
    return mag_less ? std::strong_ordering::greater
                    : std::strong_ordering::less;
  }

  friend bool operator==(const LogScaled& a, const LogScaled& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Sign sign_ = Sign::zero;
  long double log_mag_ = 0.0L;  // meaningless when sign_ == zero
};

}  // namespace hdc
