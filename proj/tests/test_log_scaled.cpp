#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hdc/log_scaled.hpp"

using hdc::LogScaled;
using hdc::Sign;

namespace {

double ulps_apart(double a, double b) {
  if (a == b) return 0.0;
  const double ulp = std::fabs(std::nextafter(a, b) - a);
  return std::fabs(a - b) / ulp;
}

}  // namespace

TEST_CASE("small-number product round-trips") {
  const auto p = LogScaled::from_double(2.0) * LogScaled::from_double(3.0);
  REQUIRE(p.sign() == Sign::positive);
  REQUIRE(ulps_apart(p.to_double(), 6.0) <= 1.0);
  REQUIRE(std::fabs(static_cast<double>(p.log_mag()) - std::log(6.0)) < 1e-15);
}

TEST_CASE("pow in log domain") {
  const auto v = pow(LogScaled::from_double(10.0), 1e6L);
  REQUIRE(v.sign() == Sign::positive);
  REQUIRE(std::fabs(static_cast<double>(v.log_mag() / 1e6L) - std::log(10.0)) <
          1e-13);

  // negative bases: integer exponents flip sign, fractional ones are errors
  const auto neg = LogScaled::from_double(-2.0);
  REQUIRE(pow(neg, 3.0L).sign() == Sign::negative);
  REQUIRE(pow(neg, 4.0L).sign() == Sign::positive);
  REQUIRE_THROWS_AS(pow(neg, 0.5L), hdc::domain_error);
  REQUIRE(pow(LogScaled{}, 2.0L).is_zero());
  REQUIRE_THROWS_AS(pow(LogScaled{}, -1.0L), hdc::domain_error);
}

TEST_CASE("division by zero is a domain error") {
  REQUIRE_THROWS_AS(LogScaled::from_double(1.0) / LogScaled{},
                    hdc::domain_error);
}

TEST_CASE("zero values compare equal regardless of stored log") {
  const auto a = LogScaled::from_log(123.0L, Sign::zero);
  const auto b = LogScaled::from_log(-7.0L, Sign::zero);
  REQUIRE(a == b);
  REQUIRE(a < LogScaled::from_double(1e-300));
  REQUIRE(a > LogScaled::from_double(-1e-300));
}

TEST_CASE("comparison is a total order consistent with real values") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> mag(-50.0, 50.0);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 2000; ++i) {
    const double x = (flip(gen) ? 1 : -1) * std::exp(mag(gen));
    const double y = (flip(gen) ? 1 : -1) * std::exp(mag(gen));
    const auto lx = LogScaled::from_double(x);
    const auto ly = LogScaled::from_double(y);
    REQUIRE((lx < ly) == (x < y));
    REQUIRE((lx == ly) == (x == y));
  }
}

TEST_CASE("round trip is within 1 ulp across the double range") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> expo(-300.0, 300.0);
  std::uniform_real_distribution<double> mant(1.0, 10.0);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 5000; ++i) {
    const double x =
        (flip(gen) ? 1 : -1) * mant(gen) * std::pow(10.0, expo(gen));
    const auto rt = LogScaled::from_double(x).to_double_checked();
    REQUIRE(!rt.underflow);
    REQUIRE(!rt.overflow);
    REQUIRE(ulps_apart(rt.value, x) <= 1.0);
  }
  REQUIRE(LogScaled::from_double(0.0).to_double() == 0.0);
}

TEST_CASE("multiplication is associative and commutative to 4 ulps") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> mag(-100.0, 100.0);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 2000; ++i) {
    const auto a = LogScaled::from_log(mag(gen),
                                       flip(gen) ? Sign::positive
                                                 : Sign::negative);
    const auto b = LogScaled::from_log(mag(gen), Sign::positive);
    const auto c = LogScaled::from_log(mag(gen), Sign::negative);
    const auto ab_c = (a * b) * c;
    const auto a_bc = a * (b * c);
    REQUIRE(ab_c.sign() == a_bc.sign());
    REQUIRE(std::fabs(static_cast<double>(ab_c.log_mag() - a_bc.log_mag())) <=
            4.0 * 1.1e-19 * 300.0);
    REQUIRE((a * b) == (b * a));
  }
}

TEST_CASE("huge exponents never overflow the representation") {
  const auto v = pow(LogScaled::from_double(10.0), 1e9L);
  REQUIRE(v.is_positive());
  const auto w = v / v;
  REQUIRE(ulps_apart(w.to_double(), 1.0) <= 1.0);
}

TEST_CASE("saturating conversion flags underflow and overflow") {
  const auto tiny = LogScaled::from_log(-800.0L);
  const auto c1 = tiny.to_double_checked();
  REQUIRE(c1.value == 0.0);
  REQUIRE(c1.underflow);
  REQUIRE(!c1.overflow);

  const auto huge = LogScaled::from_log(800.0L, Sign::negative);
  const auto c2 = huge.to_double_checked();
  REQUIRE(std::isinf(c2.value));
  REQUIRE(c2.value < 0);
  REQUIRE(c2.overflow);

  const auto zero = LogScaled{}.to_double_checked();
  REQUIRE(zero.value == 0.0);
  REQUIRE(!zero.underflow);
}

TEST_CASE("scientific rendering straight from the log") {
  REQUIRE(LogScaled::from_double(2.368e-40).sci_string(4) == "2.368e-40");
  REQUIRE(LogScaled::from_double(-315.25).sci_string(5) == "-3.1525e+2");
  REQUIRE(LogScaled{}.sci_string(6) == "0");
  const auto beyond = pow(LogScaled::from_double(10.0), 1e4L);
  REQUIRE(beyond.sci_string(3) == "1.00e+10000");
}
