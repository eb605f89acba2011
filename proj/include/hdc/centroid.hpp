#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hdc/errors.hpp"
#include "hdc/exact.hpp"

namespace hdc {

// Shared coordinate c of the k-skeleton centroid of the simplex
// conv(0, e_1, ..., e_N); the centroid itself is c * (e_1 + ... + e_N).
struct CentroidRecord {
  std::int64_t dimension = 0;
  std::int64_t skeleton = 0;
  QuadraticNumber coefficient;
  std::string approx;  // plain decimal, see quad_to_decimal
};

// Closed form for the shared centroid coordinate of the k-skeleton:
//   c = (1/N) * (k + m sqrt(k+1)) / ((k+1) + m sqrt(k+1)),   m = N - k,
// rationalized into canonical p + q*sqrt(d) with d the square-free core of
// k+1 (write sqrt(k+1) = s sqrt(d)). Multiplying through by the conjugate
// (k+1) - m sqrt(k+1) and using s^2 d = k+1 gives
//   c = [ (k+1)(k - m^2) + m s sqrt(d) ] / [ N (k+1)(k+1 - m^2) ].
// When d = 1 the radical is rational and the conjugate step is skipped
// (k+1 - m^2 can vanish there, e.g. N=5, k=3). Exact for every 0 <= k <= N.
inline QuadraticNumber centroid_coefficient(std::int64_t n, std::int64_t k) {
  if (n < 1) throw domain_error("centroid_coefficient: N must be >= 1");
  if (k < 0 || k > n)
    throw domain_error("centroid_coefficient: k must lie in 0..N");
  const std::int64_t m = n - k;
  const auto root = sqrt_canonical(k + 1);
  if (root.d == 1) {
    const BigInt s = root.outside;
    return QuadraticNumber(make_rational(k + m * s, n * ((k + 1) + m * s)));
  }
  const BigInt s = root.outside;
  const BigInt det = BigInt(k + 1) - BigInt(m) * m;  // nonzero when d > 1
  const BigRational p = make_rational(
      BigInt(k + 1) * (BigInt(k) - BigInt(m) * m), BigInt(n) * (k + 1) * det);
  const BigRational q =
      make_rational(BigInt(m) * s, BigInt(n) * (k + 1) * det);
  return QuadraticNumber::make(p, q, root.d);
}

inline CentroidRecord make_centroid_record(std::int64_t n, std::int64_t k,
                                           unsigned digits = 10) {
  CentroidRecord r;
  r.dimension = n;
  r.skeleton = k;
  r.coefficient = centroid_coefficient(n, k);
  r.approx = quad_to_decimal(r.coefficient, digits);
  return r;
}

namespace detail {

// Grouping key: canonical triples compare componentwise.
struct QuadraticKey {
  BigInt pn, pd, qn, qd, d;

  explicit QuadraticKey(const QuadraticNumber& x)
      : pn(numerator(x.rational_part())),
        pd(denominator(x.rational_part())),
        qn(numerator(x.radical_part())),
        qd(denominator(x.radical_part())),
        d(x.field()) {}

  friend bool operator<(const QuadraticKey& a, const QuadraticKey& b) {
    if (a.pn != b.pn) return a.pn < b.pn;
    if (a.pd != b.pd) return a.pd < b.pd;
    if (a.qn != b.qn) return a.qn < b.qn;
    if (a.qd != b.qd) return a.qd < b.qd;
    return a.d < b.d;
  }
};

}  // namespace detail

// Groups the intermediate skeletons 1..N-1 of dimension N by exact centroid
// value; returns the k-lists of every group (singletons included), keyed
// order unspecified.
inline std::vector<std::vector<std::int64_t>> centroid_groups(std::int64_t n) {
  std::map<detail::QuadraticKey, std::vector<std::int64_t>> groups;
  for (std::int64_t k = 1; k <= n - 1; ++k)
    groups[detail::QuadraticKey(centroid_coefficient(n, k))].push_back(k);
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(groups.size());
  for (auto& [key, ks] : groups) out.push_back(std::move(ks));
  return out;
}

// All pairs (k1, k2), 1 <= k1 < k2 <= N-1, of intermediate skeletons with
// exactly equal centroids, sorted by (k1, k2).
inline std::vector<std::pair<std::int64_t, std::int64_t>> coincident_pairs(
    std::int64_t n) {
  if (n < 2) throw domain_error("coincident_pairs: N must be >= 2");
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& ks : centroid_groups(n)) {
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = i + 1; j < ks.size(); ++j)
        pairs.emplace_back(ks[i], ks[j]);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

// Independent centroid computation that never touches the closed form: it
// walks every k-face of the simplex and takes the k-volume-weighted average
// of the face centroids.
//
// Face volumes, via Gram determinants (vol = sqrt(det G)/k! for the edge
// matrix at any vertex):
//   * a face on the origin, conv(0, e_{i1}, .., e_{ik}): edges are
//     orthonormal basis vectors, det G = 1, so vol = 1/k!;
//   * a face on basis vectors only, conv(e_{i0}, .., e_{ik}): edges
//     e_{ij} - e_{i0} give G = I + J (all-ones), det G = k+1, so
//     vol = sqrt(k+1)/k!.
// The common 1/k! cancels from the average and is dropped. Each face's
// centroid is the plain vertex average, so a face contributes weight/(k+1)
// to every coordinate whose basis vector it contains; the origin contributes
// nothing. Integer face counts are accumulated during enumeration and turned
// into one exact quadratic division at the end.
inline QuadraticNumber skeleton_centroid_oracle(std::int64_t n,
                                                std::int64_t k) {
  if (n < 1) throw domain_error("skeleton_centroid_oracle: N must be >= 1");
  if (k < 0 || k > n)
    throw domain_error("skeleton_centroid_oracle: k must lie in 0..N");
  if (n > 16)
    throw resource_limit_error(
        "skeleton_centroid_oracle: face enumeration is limited to N <= 16");

  const std::size_t verts = static_cast<std::size_t>(n) + 1;  // 0, e_1..e_N
  std::vector<std::int64_t> corner_hits(verts, 0);   // faces containing 0
  std::vector<std::int64_t> regular_hits(verts, 0);  // faces avoiding 0
  std::int64_t corner_faces = 0, regular_faces = 0;

  // Enumerate (k+1)-subsets of {0..N} in lexicographic order.
  std::vector<std::size_t> face(static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < face.size(); ++i) face[i] = i;
  for (;;) {
    const bool corner = (face[0] == 0);
    if (corner)
      ++corner_faces;
    else
      ++regular_faces;
    for (std::size_t v : face) {
      if (v == 0) continue;
      if (corner)
        ++corner_hits[v];
      else
        ++regular_hits[v];
    }
    // next combination
    std::size_t i = face.size();
    while (i > 0 && face[i - 1] == verts - face.size() + (i - 1)) --i;
    if (i == 0) break;
    ++face[i - 1];
    for (std::size_t j = i; j < face.size(); ++j) face[j] = face[j - 1] + 1;
  }

  const QuadraticNumber root = QuadraticNumber::sqrt_of(BigInt(k + 1));
  const QuadraticNumber total_weight =
      QuadraticNumber(corner_faces) + QuadraticNumber(regular_faces) * root;
  QuadraticNumber shared;
  bool first = true;
  for (std::size_t v = 1; v < verts; ++v) {
    const QuadraticNumber weighted = QuadraticNumber(corner_hits[v]) +
                                     QuadraticNumber(regular_hits[v]) * root;
    const QuadraticNumber coord =
        weighted / (QuadraticNumber(k + 1) * total_weight);
    if (first) {
      shared = coord;
      first = false;
    } else if (!(coord == shared)) {
      throw std::logic_error(
          "skeleton_centroid_oracle: coordinates differ, enumeration bug");
    }
  }
  return shared;
}

// --- triangle centroids in the plane -------------------------------------

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct TriangleCentroids {
  Point2 vertex;  // mean of the three vertices
  Point2 edge;    // perimeter-weighted mean of edge midpoints
  Point2 solid;   // area centroid
};

// The three centroid notions for a triangle. The solid centroid is computed
// with the generic polygon (shoelace) area formula, an independent route
// from the vertex mean, so the vertex/solid identity is genuinely exercised.
inline TriangleCentroids triangle_centroids(Point2 a, Point2 b, Point2 c) {
  const double cross =
      (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  if (cross == 0.0)
    throw degenerate_triangle_error("triangle_centroids: collinear vertices");

  TriangleCentroids r;
  r.vertex = {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};

  const double lab = std::hypot(b.x - a.x, b.y - a.y);
  const double lbc = std::hypot(c.x - b.x, c.y - b.y);
  const double lca = std::hypot(a.x - c.x, a.y - c.y);
  const double per = lab + lbc + lca;
  r.edge = {(lab * (a.x + b.x) / 2 + lbc * (b.x + c.x) / 2 +
             lca * (c.x + a.x) / 2) /
                per,
            (lab * (a.y + b.y) / 2 + lbc * (b.y + c.y) / 2 +
             lca * (c.y + a.y) / 2) /
                per};

  const Point2 t[3] = {a, b, c};
  double area2 = 0.0, cx = 0.0, cy = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Point2& u = t[i];
    const Point2& w = t[(i + 1) % 3];
    const double cr = u.x * w.y - w.x * u.y;
    area2 += cr;
    cx += (u.x + w.x) * cr;
    cy += (u.y + w.y) * cr;
  }
  r.solid = {cx / (3.0 * area2), cy / (3.0 * area2)};
  return r;
}

}  // namespace hdc
