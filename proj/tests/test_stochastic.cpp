#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "hdc/ball.hpp"
#include "hdc/centroid.hpp"
#include "hdc/philox.hpp"
#include "hdc/stochastic.hpp"

using hdc::binomial_lower_bound;
using hdc::CounterRng;
using hdc::gaussian_norm_check;
using hdc::gaussian_norm_mc;
using hdc::gaussian_norm_quadrature;
using hdc::McEstimate;
using hdc::mc_ball_volume;
using hdc::mc_leak_fraction;
using hdc::mc_shell_fraction;
using hdc::mc_skeleton_centroid;
using hdc::Philox4x32;

namespace {

bool within_3_sigma(const McEstimate& e, double reference) {
  return std::fabs(e.mean - reference) <= 3.0 * e.std_error;
}

}  // namespace

TEST_CASE("Philox4x32-10 known-answer vectors") {
  // Published Random123 vectors, cross-checked against an independent
  // implementation.
  auto out = Philox4x32::block({0, 0, 0, 0}, {0, 0});
  REQUIRE(out == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du,
                                              0xbc57ac4cu, 0x9b00dbd8u});
  out = Philox4x32::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                          {0xffffffffu, 0xffffffffu});
  REQUIRE(out == std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu,
                                              0xa20bc7c6u, 0x6d5451fdu});
  out = Philox4x32::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          {0xa4093822u, 0x299f31d0u});
  REQUIRE(out == std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu,
                                              0x5001e420u, 0x24126ea1u});
}

TEST_CASE("counter words are addressable and in range") {
  const CounterRng rng(42);
  const auto w = rng.words(7, 3);
  REQUIRE(w == rng.words(7, 3));
  REQUIRE(w != rng.words(8, 3));
  REQUIRE(w != rng.words(7, 4));
  double mean = 0.0;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    const double u = CounterRng::to_unit(rng.words(i, 0)[0]);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    mean += u;
  }
  mean /= 20000;
  REQUIRE(std::fabs(mean - 0.5) < 0.01);
}

TEST_CASE("Gaussian integral by tensor quadrature") {
  REQUIRE(std::fabs(gaussian_norm_quadrature(1) - 1.0) < 1e-8);
  REQUIRE(std::fabs(gaussian_norm_quadrature(2) - 1.0) < 1e-7);
  REQUIRE(std::fabs(gaussian_norm_quadrature(3) - 1.0) < 1e-6);
  REQUIRE_THROWS_AS(gaussian_norm_quadrature(4), hdc::resource_limit_error);
}

TEST_CASE("Gaussian integral by stratified Monte Carlo") {
  for (int n : {4, 6, 8}) {
    const auto e = gaussian_norm_mc(n, 1000000, 99);
    INFO("N=" << n << " mean=" << e.mean << " se=" << e.std_error);
    REQUIRE(within_3_sigma(e, 1.0));
    REQUIRE(e.std_error < 0.05);
  }
  REQUIRE_THROWS_AS(gaussian_norm_mc(9, 1000000, 1),
                    hdc::resource_limit_error);
  // umbrella picks quadrature for small N
  const auto q = gaussian_norm_check(2, 10, 5);
  REQUIRE(q.std_error == 0.0);
  REQUIRE(std::fabs(q.mean - 1.0) < 1e-7);
}

TEST_CASE("ball volume by hit-or-miss") {
  const auto e2 = mc_ball_volume(2, 1000000, 7);
  REQUIRE(within_3_sigma(e2, std::numbers::pi));
  const auto e5 = mc_ball_volume(5, 1000000, 7);
  REQUIRE(within_3_sigma(e5, 5.263789013914324));
  const auto e10 = mc_ball_volume(10, 2000000, 7);
  // pi^5/120
  REQUIRE(within_3_sigma(e10, std::pow(std::numbers::pi, 5) / 120.0));
  REQUIRE(std::fabs(e10.mean - 2.5502) < 3.0 * e10.std_error + 1e-4);
  REQUIRE_THROWS_AS(mc_ball_volume(13, 100, 1), hdc::resource_limit_error);
  REQUIRE_THROWS_AS(mc_ball_volume(1, 100, 1), hdc::resource_limit_error);
}

TEST_CASE("identical inputs give bit-identical estimates for any workers") {
  const auto a = mc_ball_volume(4, 300000, 123, 1);
  const auto b = mc_ball_volume(4, 300000, 123, 4);
  REQUIRE(a.mean == b.mean);
  REQUIRE(a.std_error == b.std_error);
  const auto c = gaussian_norm_mc(5, 200000, 9, 1);
  const auto d = gaussian_norm_mc(5, 200000, 9, 3);
  REQUIRE(c.mean == d.mean);
  REQUIRE(c.std_error == d.std_error);
  const auto s1 = mc_skeleton_centroid(4, 2, 100000, 5, 1);
  const auto s2 = mc_skeleton_centroid(4, 2, 100000, 5, 4);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    REQUIRE(s1[i].mean == s2[i].mean);
    REQUIRE(s1[i].std_error == s2[i].std_error);
  }
  // different seeds genuinely move the stream
  REQUIRE(mc_ball_volume(4, 300000, 124).mean != a.mean);
}

TEST_CASE("3-sigma calibration of the reference coverage") {
  // over 200 seeds the true value must sit inside the 3-sigma band >= 99%
  // of the time
  const double omega3 = 4.0 * std::numbers::pi / 3.0;
  int misses = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto e = mc_ball_volume(3, 100000, seed);
    if (!within_3_sigma(e, omega3)) ++misses;
  }
  REQUIRE(misses <= 2);
}

TEST_CASE("shell fraction sampling matches the closed form") {
  const auto e = mc_shell_fraction(100, 0.01, 1000000, 11);
  REQUIRE(within_3_sigma(e, hdc::shell_fraction(100, 0.01)));

  const auto whole = mc_shell_fraction(5, 1.0, 100000, 3);
  REQUIRE(whole.mean == 1.0);
  REQUIRE(whole.std_error == 0.0);
  const auto none = mc_shell_fraction(5, 0.0, 100000, 3);
  REQUIRE(none.mean == 0.0);
  REQUIRE(none.std_error == 0.0);
  REQUIRE_THROWS_AS(mc_shell_fraction(5, 1.5, 100, 1), hdc::domain_error);
}

TEST_CASE("radial law goodness of fit") {
  // r = U^(1/5) against the density 5 r^4: chi-square over 20 equiprobable
  // bins, 19 dof, alpha = 1e-3 critical value 43.82
  const CounterRng rng(42);
  constexpr int kBins = 20;
  constexpr std::uint64_t kSamples = 1000000;
  std::array<std::uint64_t, kBins> counts{};
  for (std::uint64_t i = 0; i < kSamples; ++i) {
    const double u = CounterRng::to_unit(rng.words(i, 0)[0]);
    const double r = std::pow(u, 0.2);
    // CDF r^5 is uniform; bin by the CDF value
    int bin = static_cast<int>(std::pow(r, 5.0) * kBins);
    bin = std::min(bin, kBins - 1);
    ++counts[static_cast<std::size_t>(bin)];
  }
  const double expected = static_cast<double>(kSamples) / kBins;
  double chi2 = 0.0;
  for (const auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  INFO("chi2 = " << chi2);
  REQUIRE(chi2 < 43.8202);
}

TEST_CASE("leak fraction is zero up to the osculating dimension") {
  const auto e2 = mc_leak_fraction(2, 200000, 17);
  REQUIRE(e2.mean == 0.0);
  REQUIRE(e2.std_error == 0.0);
  const auto e4 = mc_leak_fraction(4, 200000, 17);
  REQUIRE(e4.mean == 0.0);
}

TEST_CASE("leak fraction is positive from dimension five") {
  const auto e5 = mc_leak_fraction(5, 1000000, 17);
  REQUIRE(e5.mean > 0.0);
  const std::uint64_t hits =
      static_cast<std::uint64_t>(std::llround(e5.mean * 1000000));
  REQUIRE(binomial_lower_bound(hits, 1000000, 2.3263) > 0.0);
  INFO("leak fraction at N=5: " << e5.mean);
  // explicit witness: the point (sqrt(5)-1) e_1 lies outside the box
  REQUIRE(hdc::inner_radius(5) > 1.0);
}

TEST_CASE("skeleton centroid sampling agrees with the exact coefficient") {
  const double c21 = hdc::centroid_coefficient(2, 1).to_double();
  for (const auto& e : mc_skeleton_centroid(2, 1, 1000000, 21))
    REQUIRE(within_3_sigma(e, c21));

  for (const auto& e : mc_skeleton_centroid(3, 3, 1000000, 22))
    REQUIRE(within_3_sigma(e, 0.25));

  const double c94 = hdc::centroid_coefficient(9, 4).to_double();
  for (const auto& e : mc_skeleton_centroid(9, 4, 1000000, 23))
    REQUIRE(within_3_sigma(e, c94));

  REQUIRE_THROWS_AS(mc_skeleton_centroid(13, 3, 100, 1),
                    hdc::resource_limit_error);
}

TEST_CASE("Wilson lower bound sanity") {
  REQUIRE(binomial_lower_bound(0, 1000, 2.3263) == 0.0);
  REQUIRE(binomial_lower_bound(500, 1000, 2.3263) > 0.45);
  REQUIRE(binomial_lower_bound(500, 1000, 2.3263) < 0.5);
  REQUIRE(binomial_lower_bound(10, 1000000, 2.3263) > 0.0);
}
