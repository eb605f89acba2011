#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "hdc/errors.hpp"

namespace hdc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator(const BigRational& r) {
  return boost::multiprecision::denominator(r);
}

// cpp_rational's two-argument constructor rejects negative denominators;
// fold the sign into the numerator first.
inline BigRational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return BigRational(std::move(num), std::move(den));
}

// Floor division with b > 0 (cpp_int division truncates toward zero).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline BigInt pow10(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

// Writes sqrt(m) = outside * sqrt(d) with d square-free, by trial division.
// Intended for desk-scale m (the radicands here are k+1 <= a few thousand).
struct CanonicalRoot {
  BigInt outside;
  BigInt d;
};

inline CanonicalRoot sqrt_canonical(BigInt m) {
  if (m <= 0) throw domain_error("sqrt_canonical: m must be positive");
  CanonicalRoot r{1, 1};
  for (BigInt p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      r.outside *= p;
    }
    if (m % p == 0) {
      m /= p;
      r.d *= p;
    }
  }
  r.d *= m;  // leftover factor is prime (or 1)
  return r;
}

// Canonical element p + q*sqrt(d) of a real quadratic field: d square-free and
// >= 1, and q = 0 forces d = 1, so two values are equal exactly when their
// component triples are. Mixed-field arithmetic is rejected rather than
// approximated.
class QuadraticNumber {
 public:
  QuadraticNumber() : p_(0), q_(0), d_(1) {}
  QuadraticNumber(BigRational rational) : p_(std::move(rational)), q_(0), d_(1) {}
  QuadraticNumber(std::int64_t rational) : p_(rational), q_(0), d_(1) {}

  // p + q*sqrt(radicand); the radicand may carry square factors.
  static QuadraticNumber make(BigRational p, BigRational q, BigInt radicand) {
    const CanonicalRoot root = sqrt_canonical(std::move(radicand));
    QuadraticNumber x;
    x.p_ = std::move(p);
    x.q_ = std::move(q) * BigRational(root.outside);
    x.d_ = root.d;
    x.normalize();
    return x;
  }

  static QuadraticNumber sqrt_of(BigInt radicand) {
    return make(0, 1, std::move(radicand));
  }

  const BigRational& rational_part() const { return p_; }
  const BigRational& radical_part() const { return q_; }
  const BigInt& field() const { return d_; }
  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  int sign() const {
    const int sp = p_.sign();
    const int sq = q_.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 against q^2 d; sqrt(d) is irrational here,
    // so the difference cannot vanish.
    const int cmp = (p_ * p_ - q_ * q_ * BigRational(d_)).sign();
    return cmp >= 0 ? sp : sq;
  }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
  }

  friend QuadraticNumber operator-(const QuadraticNumber& x) {
    QuadraticNumber r = x;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
  }

  friend QuadraticNumber operator+(const QuadraticNumber& a,
                                   const QuadraticNumber& b) {
    const BigInt d = joint_field(a, b, "quad_add");
    QuadraticNumber r;
    r.p_ = a.p_ + b.p_;
    r.q_ = a.q_ + b.q_;
    r.d_ = d;
    r.normalize();
    return r;
  }

  friend QuadraticNumber operator-(const QuadraticNumber& a,
                                   const QuadraticNumber& b) {
    return a + (-b);
  }

  friend QuadraticNumber operator*(const QuadraticNumber& a,
                                   const QuadraticNumber& b) {
    const BigInt d = joint_field(a, b, "quad_mul");
    QuadraticNumber r;
    r.p_ = a.p_ * b.p_ + a.q_ * b.q_ * BigRational(d);
    r.q_ = a.p_ * b.q_ + a.q_ * b.p_;
    r.d_ = d;
    r.normalize();
    return r;
  }

  friend QuadraticNumber operator/(const QuadraticNumber& a,
                                   const QuadraticNumber& b) {
    if (b.is_zero()) throw domain_error("quad_div: division by zero");
    const BigInt d = joint_field(a, b, "quad_div");
    QuadraticNumber r;
    if (b.q_ == 0) {
      r.p_ = a.p_ / b.p_;
      r.q_ = a.q_ / b.p_;
    } else {
      // Rationalize with the conjugate; the norm p^2 - q^2 d of a nonzero
      // element of Q(sqrt(d)), d > 1 square-free, is never zero.
      const BigRational norm = b.p_ * b.p_ - b.q_ * b.q_ * BigRational(d);
      r.p_ = (a.p_ * b.p_ - a.q_ * b.q_ * BigRational(d)) / norm;
      r.q_ = (a.q_ * b.p_ - a.p_ * b.q_) / norm;
    }
    r.d_ = d;
    r.normalize();
    return r;
  }

  double to_double() const {
    double v = p_.convert_to<double>();
    if (q_ != 0)
      v += q_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
    return v;
  }

  // Exact rendering: "23/312", "7", "1/4*sqrt(2)", "1/2 - 1/3*sqrt(5)".
  std::string exact_string() const {
    std::ostringstream os;
    if (q_ == 0) {
      os << p_;
      return os.str();
    }
    if (p_ != 0) os << p_ << (q_ > 0 ? " + " : " - ");
    else if (q_ < 0) os << "-";
    BigRational aq = q_ < 0 ? BigRational(-q_) : q_;
    if (aq != 1) os << aq << "*";
    os << "sqrt(" << d_ << ")";
    return os.str();
  }

  // Exact floor, via integer square roots only.
  BigInt floor_value() const {
    if (q_ == 0) return floor_div(numerator(p_), denominator(p_));
    // x = (P + Q sqrt(d)) / R with R > 0.
    const BigInt pb = denominator(p_), qb = denominator(q_);
    const BigInt P = numerator(p_) * qb;
    const BigInt Q = numerator(q_) * pb;
    const BigInt R = pb * qb;
    const BigInt M = Q * Q * d_;
    const BigInt S = boost::multiprecision::sqrt(M);  // floor sqrt
    BigInt m = (Q > 0) ? floor_div(P + S, R) : floor_div(P - S - 1, R);
    // The estimate is off by at most one; fix with an exact comparison of
    // (m+1) R <= P + Q sqrt(d).
    for (;;) {
      const BigInt L = (m + 1) * R - P;
      bool le;
      if (Q > 0)
        le = (L <= 0) || (L * L <= M);
      else
        le = (L <= 0) && (L * L >= M);
      if (!le) break;
      ++m;
    }
    return m;
  }

 private:
  void normalize() {
    if (d_ == 1) {
      p_ += q_;
      q_ = 0;
    }
    if (q_ == 0) d_ = 1;
  }

  static BigInt joint_field(const QuadraticNumber& a, const QuadraticNumber& b,
                            const char* op) {
    if (a.q_ == 0) return b.d_;
    if (b.q_ == 0) return a.d_;
    if (a.d_ != b.d_)
      throw field_mismatch_error(std::string(op) +
                                 ": operands lie in different fields");
    return a.d_;
  }

  BigRational p_, q_;
  BigInt d_;
};

namespace detail {

// Digits of the non-negative integer n, left-padded so a decimal point can be
// placed `frac_digits` from the right.
inline std::string place_point(const BigInt& n, unsigned frac_digits) {
  std::string s = n.str();
  if (s.size() < frac_digits + 1)
    s.insert(0, frac_digits + 1 - s.size(), '0');
  s.insert(s.size() - frac_digits, 1, '.');
  return s;
}

}  // namespace detail

// Correctly rounded (round-half-even) plain-decimal rendering with `digits`
// places after the point. Ties only arise for rational values; an irrational
// p + q*sqrt(d) never lands exactly on a half-ulp, so its rounding is decided
// by exact sign tests.
inline std::string quad_to_decimal(const QuadraticNumber& x, unsigned digits) {
  if (digits < 1 || digits > 50)
    throw domain_error("quad_to_decimal: digits must be in 1..50");
  const int sgn = x.sign();
  const QuadraticNumber a = sgn < 0 ? -x : x;
  const QuadraticNumber scaled =
      a * QuadraticNumber(BigRational(pow10(digits)));
  BigInt n = scaled.floor_value();
  // Compare the fractional part against 1/2: sign of 2*(scaled - n) - 1.
  const QuadraticNumber rem2 =
      scaled * QuadraticNumber(2) - QuadraticNumber(BigRational(2 * n + 1));
  const int cmp = rem2.sign();
  if (cmp > 0 || (cmp == 0 && (n % 2) != 0)) ++n;
  std::string out = detail::place_point(n, digits);
  if (sgn < 0 && n != 0) out.insert(0, 1, '-');
  return out;
}

inline std::string rational_to_decimal(const BigRational& r, unsigned digits) {
  return quad_to_decimal(QuadraticNumber(r), digits);
}

}  // namespace hdc
