#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>

#include "hdc/diophantine.hpp"

using hdc::BigRational;
using hdc::coincidence_dimension;
using hdc::CoincidenceRow;
using hdc::coincidence_csv;
using hdc::cross_validate_coincidences;
using hdc::enumerate_coincidences;
using hdc::no_triple_coincidence;

TEST_CASE("dimension form") {
  REQUIRE(coincidence_dimension(2, 3) == 13);
  REQUIRE(coincidence_dimension(2, 4) == 21);
  REQUIRE(coincidence_dimension(1, 1) == 0);
}

TEST_CASE("the ten rows up to dimension 65") {
  const auto rows = enumerate_coincidences(65);
  REQUIRE(rows.size() == 10);
  const std::vector<std::array<std::int64_t, 3>> expected = {
      {13, 3, 8},  {21, 3, 15}, {29, 8, 15}, {31, 3, 24}, {40, 8, 24},
      {43, 3, 35}, {51, 15, 24}, {53, 8, 35}, {57, 3, 48}, {65, 15, 35}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].dimension == expected[i][0]);
    REQUIRE(rows[i].k1 == expected[i][1]);
    REQUIRE(rows[i].k2 == expected[i][2]);
    REQUIRE(rows[i].k1 == rows[i].a * rows[i].a - 1);
    REQUIRE(rows[i].k2 == rows[i].b * rows[i].b - 1);
    REQUIRE(rows[i].coordinate.is_rational());
  }
  // 10-digit coordinates; row N=40 is the correctly rounded 0.0247619048
  // (13/525 = 0.0247619047619..., next digit 6)
  const std::vector<std::string> decimals = {
      "0.0737179487", "0.0464285714", "0.0340038314", "0.0317204301",
      "0.0247619048", "0.0229789590", "0.0194852941", "0.0187368973",
      "0.0173872180", "0.0153133903"};
  for (std::size_t i = 0; i < rows.size(); ++i)
    REQUIRE(hdc::quad_to_decimal(rows[i].coordinate, 10) == decimals[i]);
}

TEST_CASE("empty below thirteen, one row at thirteen") {
  REQUIRE(enumerate_coincidences(12).empty());
  const auto rows = enumerate_coincidences(13);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].dimension == 13);
  REQUIRE(rows[0].coordinate.rational_part() == BigRational(23, 312));
  REQUIRE(hdc::quad_to_decimal(rows[0].coordinate, 10) == "0.0737179487");
  REQUIRE_THROWS_AS(enumerate_coincidences(1), hdc::domain_error);
}

TEST_CASE("parametrization soundness up to dimension 200") {
  for (const auto& row : enumerate_coincidences(200)) {
    REQUIRE(hdc::centroid_coefficient(row.dimension, row.k1) ==
            hdc::centroid_coefficient(row.dimension, row.k2));
    REQUIRE(1 <= row.k1);
    REQUIRE(row.k1 < row.k2);
    REQUIRE(row.k2 <= row.dimension - 1);
  }
}

TEST_CASE("exhaustive scan and parametrization agree to dimension 100") {
  const auto report = cross_validate_coincidences(100);
  REQUIRE(report.ok());
  REQUIRE(report.rows_found == 18);
}

TEST_CASE("both directions empty/matching at the boundary dimensions") {
  const auto r12 = cross_validate_coincidences(12);
  REQUIRE(r12.ok());
  REQUIRE(r12.rows_found == 0);
  const auto r13 = cross_validate_coincidences(13);
  REQUIRE(r13.ok());
  REQUIRE(r13.rows_found == 1);
}

TEST_CASE("no triple coincidence at desk scale") {
  REQUIRE(no_triple_coincidence(13));
  REQUIRE(no_triple_coincidence(2));
  REQUIRE(no_triple_coincidence(300));
}

TEST_CASE("same-a injectivity of the dimension form") {
  // b -> b^2 + (a-1) b is strictly increasing, so Q(a,b) != Q(a,c)
  for (std::int64_t a = 1; a <= 100; ++a)
    for (std::int64_t b = a + 1; b <= 200; b += 7)
      for (std::int64_t c = b + 1; c <= 200; c += 11)
        REQUIRE(coincidence_dimension(a, b) != coincidence_dimension(a, c));
}

TEST_CASE("duplicate dimensions are reported, not suppressed") {
  // distinct (a,b) can share a dimension; the first is N = 133 from (2,11)
  // and (6,8). Both rows must appear.
  const auto rows = enumerate_coincidences(200);
  std::map<std::int64_t, int> count;
  for (const auto& r : rows) ++count[r.dimension];
  REQUIRE(count[133] == 2);
  std::vector<CoincidenceRow> at133;
  for (const auto& r : rows)
    if (r.dimension == 133) at133.push_back(r);
  REQUIRE(at133[0].k1 == 3);
  REQUIRE(at133[0].k2 == 120);
  REQUIRE(at133[1].k1 == 35);
  REQUIRE(at133[1].k2 == 63);
}

TEST_CASE("sparsity at desk scale, recorded informationally") {
  // Count distinct coincidence dimensions <= 1e4 and primes <= 1e4. The
  // comparison is an observation, not an assertion: at this scale the
  // coincidence dimensions (2464) outnumber the primes (1229).
  const auto rows = enumerate_coincidences(10000);
  std::set<std::int64_t> dims;
  for (const auto& r : rows) dims.insert(r.dimension);

  std::vector<bool> sieve(10001, true);
  sieve[0] = sieve[1] = false;
  for (int i = 2; i * i <= 10000; ++i)
    if (sieve[i])
      for (int j = i * i; j <= 10000; j += i) sieve[j] = false;
  const auto primes = std::count(sieve.begin(), sieve.end(), true);

  WARN("coincidence dimensions <= 1e4: " << dims.size()
       << ", primes <= 1e4: " << primes);
  REQUIRE(dims.size() == 2464);
  REQUIRE(primes == 1229);
}

TEST_CASE("csv emission") {
  const auto rows = enumerate_coincidences(21);
  const std::string csv = coincidence_csv(rows, 10);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  REQUIRE(line == "N,k1,k2,a,b,coordinate_exact,coordinate_decimal");
  std::getline(is, line);
  REQUIRE(line == "13,3,8,2,3,23/312,0.0737179487");
  std::getline(is, line);
  REQUIRE(line == "21,3,15,2,4,13/280,0.0464285714");
  REQUIRE(!std::getline(is, line));
}
