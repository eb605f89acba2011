#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hdc/centroid.hpp"
#include "hdc/errors.hpp"
#include "hdc/exact.hpp"

namespace hdc {

// Dimension in which the skeletons k1 = a^2 - 1 and k2 = b^2 - 1 share a
// centroid: (b^2 + ab + a^2) - (b + a) - 1.
inline std::int64_t coincidence_dimension(std::int64_t a, std::int64_t b) {
  return (b * b + a * b + a * a) - (b + a) - 1;
}

struct CoincidenceRow {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t dimension = 0;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  QuadraticNumber coordinate;  // always rational: k1+1 and k2+1 are squares

  friend bool operator==(const CoincidenceRow& x, const CoincidenceRow& y) {
    return x.a == y.a && x.b == y.b && x.dimension == y.dimension &&
           x.k1 == y.k1 && x.k2 == y.k2;
  }
};

// All coincidence rows with dimension <= n_max, sorted by (N, k1). Starts at
// a = 2: a = 1 would give k1 = 0, the vertex skeleton, which is outside the
// intermediate range 1 <= k1 < k2 <= N-1. Distinct (a,b) pairs may share a
// dimension; both rows are kept.
inline std::vector<CoincidenceRow> enumerate_coincidences(std::int64_t n_max) {
  if (n_max < 2) throw domain_error("enumerate_coincidences: n_max must be >= 2");
  std::vector<CoincidenceRow> rows;
  for (std::int64_t a = 2; coincidence_dimension(a, a + 1) <= n_max; ++a) {
    for (std::int64_t b = a + 1; coincidence_dimension(a, b) <= n_max; ++b) {
      CoincidenceRow row;
      row.a = a;
      row.b = b;
      row.dimension = coincidence_dimension(a, b);
      row.k1 = a * a - 1;
      row.k2 = b * b - 1;
      if (!(1 <= row.k1 && row.k1 < row.k2 && row.k2 <= row.dimension - 1))
        continue;
      row.coordinate = centroid_coefficient(row.dimension, row.k1);
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const CoincidenceRow& x, const CoincidenceRow& y) {
              if (x.dimension != y.dimension) return x.dimension < y.dimension;
              if (x.k1 != y.k1) return x.k1 < y.k1;
              return x.k2 < y.k2;
            });
  return rows;
}

struct CoincidenceVerification {
  std::int64_t n_max = 0;
  std::int64_t rows_found = 0;
  std::vector<std::string> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

// Cross-validates the (a,b) parametrization against the exhaustive
// exact-equality scan, dimension by dimension up to n_max.
inline CoincidenceVerification cross_validate_coincidences(
    std::int64_t n_max) {
  if (n_max < 2)
    throw domain_error("cross_validate_coincidences: n_max must be >= 2");
  CoincidenceVerification report;
  report.n_max = n_max;

  const std::vector<CoincidenceRow> rows = enumerate_coincidences(n_max);
  report.rows_found = static_cast<std::int64_t>(rows.size());
  std::size_t cursor = 0;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> parametrized;
    while (cursor < rows.size() && rows[cursor].dimension == n) {
      parametrized.emplace_back(rows[cursor].k1, rows[cursor].k2);
      ++cursor;
    }
    const auto exhaustive = coincident_pairs(n);
    if (exhaustive != parametrized) {
      std::ostringstream os;
      os << "N=" << n << ": exhaustive scan found " << exhaustive.size()
         << " pair(s), parametrization " << parametrized.size();
      report.discrepancies.push_back(os.str());
    }
  }
  return report;
}

// True iff no dimension N <= n_max has three intermediate skeletons sharing
// a centroid, by exact grouping of the canonical coordinate values per N.
inline bool no_triple_coincidence(std::int64_t n_max) {
  if (n_max < 2) throw domain_error("no_triple_coincidence: n_max must be >= 2");
  for (std::int64_t n = 2; n <= n_max; ++n)
    for (const auto& group : centroid_groups(n))
      if (group.size() > 2) return false;
  return true;
}

// --- table emission -------------------------------------------------------

inline constexpr const char* kCoincidenceCsvHeader =
    "N,k1,k2,a,b,coordinate_exact,coordinate_decimal";

inline std::string coincidence_csv(const std::vector<CoincidenceRow>& rows,
                                   unsigned digits = 10) {
  std::ostringstream os;
  os << kCoincidenceCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.dimension << ',' << r.k1 << ',' << r.k2 << ',' << r.a << ','
       << r.b << ',' << r.coordinate.exact_string() << ','
       << quad_to_decimal(r.coordinate, digits) << '\n';
  }
  return os.str();
}

}  // namespace hdc
