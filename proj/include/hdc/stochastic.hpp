#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <thread>
#include <vector>

#include "hdc/ball.hpp"
#include "hdc/centroid.hpp"
#include "hdc/errors.hpp"
#include "hdc/leakage.hpp"
#include "hdc/philox.hpp"

namespace hdc {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Runs `per_block(begin, end)` over fixed index blocks and folds the partial
// results in a fixed pairwise tree. Block boundaries and fold order depend
// only on n, so the result is bit-identical for any worker count.
template <class Acc, class BlockFn>
Acc blocked_reduce(std::uint64_t n, int workers, BlockFn per_block) {
  constexpr std::uint64_t kBlock = 1u << 14;
  const std::uint64_t nblocks = (n + kBlock - 1) / kBlock;
  if (nblocks == 0) return Acc{};
  std::vector<Acc> parts(nblocks);
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = static_cast<int>(std::clamp(hw, 1u, 8u));
  }
  auto run = [&](std::uint64_t b) {
    parts[b] = per_block(b * kBlock, std::min(n, (b + 1) * kBlock));
  };
  if (workers == 1 || nblocks == 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b) run(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (std::uint64_t b; (b = next.fetch_add(1)) < nblocks;) run(b);
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), nblocks));
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::uint64_t stride = 1; stride < nblocks; stride *= 2)
    for (std::uint64_t i = 0; i + stride < nblocks; i += 2 * stride)
      parts[i].combine(parts[i + stride]);
  return parts[0];
}

struct CountAcc {
  std::uint64_t hits = 0;
  void combine(const CountAcc& o) { hits += o.hits; }
};

struct MomentAcc {
  double sum = 0.0;
  double sumsq = 0.0;
  void combine(const MomentAcc& o) {
    sum += o.sum;
    sumsq += o.sumsq;
  }
};

struct VectorMomentAcc {
  std::vector<double> sum;
  std::vector<double> sumsq;
  void resize(std::size_t n) {
    sum.assign(n, 0.0);
    sumsq.assign(n, 0.0);
  }
  void combine(const VectorMomentAcc& o) {
    if (sum.empty()) {
      *this = o;
      return;
    }
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += o.sum[i];
      sumsq[i] += o.sumsq[i];
    }
  }
};

struct StrataAcc {
  std::vector<double> sum;
  std::vector<double> sumsq;
  std::vector<std::uint64_t> count;
  void resize(std::size_t s) {
    sum.assign(s, 0.0);
    sumsq.assign(s, 0.0);
    count.assign(s, 0);
  }
  void combine(const StrataAcc& o) {
    if (sum.empty()) {
      *this = o;
      return;
    }
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += o.sum[i];
      sumsq[i] += o.sumsq[i];
      count[i] += o.count[i];
    }
  }
};

inline McEstimate binomial_estimate(std::uint64_t hits, std::uint64_t n,
                                    std::uint64_t seed, double scale) {
  McEstimate e;
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  e.mean = scale * p;
  e.std_error = scale * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  e.samples = n;
  e.seed = seed;
  return e;
}

inline std::uint64_t binomial_coeff(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

// Wilson one-sided lower confidence bound for a binomial proportion.
inline double binomial_lower_bound(std::uint64_t hits, std::uint64_t n,
                                   double z) {
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double centre = p + z2 / (2.0 * nn);
  const double half =
      z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return (centre - half) / (1.0 + z2 / nn);
}

// --- Gauss-Legendre quadrature --------------------------------------------

namespace detail {

struct QuadNode {
  double x;
  double w;
};

// Nodes/weights on [-1, 1] by Newton iteration on the Legendre recurrence.
inline std::vector<QuadNode> gauss_legendre(int n) {
  std::vector<QuadNode> nodes(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = {-x, w};
    nodes[n - 1 - i] = {x, w};
  }
  return nodes;
}

}  // namespace detail

// Deterministic tensor-product quadrature of the Gaussian integral
// int_cube exp(-pi |x|^2) over [-3,3]^N; the tail beyond the cube is below
// 1e-13 per axis. Exponential node cost limits N to 3.
inline double gaussian_norm_quadrature(int n) {
  if (n < 1 || n > 3)
    throw resource_limit_error(
        "gaussian_norm_quadrature: tensor quadrature is limited to N <= 3");
  static const std::vector<detail::QuadNode> base = detail::gauss_legendre(48);
  const double half = 3.0;
  std::vector<double> t(base.size()), w(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    t[i] = half * base[i].x;
    w[i] = half * base[i].w;
  }
  const std::size_t m = base.size();
  double total = 0.0;
  if (n == 1) {
    for (std::size_t i = 0; i < m; ++i)
      total += w[i] * std::exp(-std::numbers::pi * t[i] * t[i]);
  } else if (n == 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        total += w[i] * w[j] *
                 std::exp(-std::numbers::pi * (t[i] * t[i] + t[j] * t[j]));
  } else {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const double pre = w[i] * w[j];
        const double r2ij = t[i] * t[i] + t[j] * t[j];
        for (std::size_t l = 0; l < m; ++l)
          total += pre * w[l] *
                   std::exp(-std::numbers::pi * (r2ij + t[l] * t[l]));
      }
  }
  return total;
}

// Monte Carlo estimate of the same integral over the truncated cube,
// stratified per axis into four magnitude bins (4^N strata). Each stratum
// owns a contiguous run of sample indices and is reduced by its own
// sequential loop; the cross-stratum fold runs in stratum order, so the
// result is bit-identical for any worker count.
inline McEstimate gaussian_norm_mc(int n, std::uint64_t budget,
                                   std::uint64_t seed, int workers = 0) {
  if (n < 1 || n > 8)
    throw resource_limit_error("gaussian_norm_mc: supported for 1 <= N <= 8");
  static constexpr double kEdges[5] = {0.0, 0.375, 0.75, 1.5, 3.0};
  std::uint64_t strata = 1;
  for (int i = 0; i < n; ++i) strata *= 4;
  const std::uint64_t per_stratum = budget / strata;
  if (per_stratum < 2)
    throw domain_error("gaussian_norm_mc: budget too small to stratify");
  const CounterRng rng(seed);

  std::vector<detail::MomentAcc> moments(strata);
  std::atomic<std::uint64_t> next{0};
  auto run_stratum = [&](std::uint64_t s) {
    detail::MomentAcc a;
    std::uint64_t bins[8];
    std::uint64_t rest = s;
    for (int axis = 0; axis < n; ++axis) {
      bins[axis] = rest % 4;
      rest /= 4;
    }
    for (std::uint64_t j = 0; j < per_stratum; ++j) {
      const std::uint64_t i = s * per_stratum + j;
      double r2 = 0.0;
      for (int axis = 0; axis < n; ++axis) {
        const auto w = rng.words(i, static_cast<std::uint32_t>(axis));
        const double u = CounterRng::to_unit(w[0]);
        const double sign = (w[1] & 1u) ? 1.0 : -1.0;
        const std::uint64_t b = bins[axis];
        const double t = sign * (kEdges[b] + (kEdges[b + 1] - kEdges[b]) * u);
        r2 += t * t;
      }
      const double f = std::exp(-std::numbers::pi * r2);
      a.sum += f;
      a.sumsq += f * f;
    }
    moments[s] = a;
  };
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = static_cast<int>(std::clamp(hw, 1u, 8u));
  }
  if (workers == 1) {
    for (std::uint64_t s = 0; s < strata; ++s) run_stratum(s);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::uint64_t s; (s = next.fetch_add(1)) < strata;) run_stratum(s);
      });
    for (auto& th : pool) th.join();
  }

  McEstimate e;
  e.samples = per_stratum * strata;
  e.seed = seed;
  const double cube_volume = std::pow(6.0, n);
  const double m = static_cast<double>(per_stratum);
  double mean = 0.0, var = 0.0;
  for (std::uint64_t s = 0; s < strata; ++s) {
    // stratum probability under the uniform cube law
    double prob = 1.0;
    std::uint64_t rest = s;
    for (int axis = 0; axis < n; ++axis) {
      const std::uint64_t b = rest % 4;
      rest /= 4;
      prob *= (kEdges[b + 1] - kEdges[b]) / 3.0;
    }
    const double ms = moments[s].sum / m;
    const double vs =
        (moments[s].sumsq - moments[s].sum * moments[s].sum / m) / (m - 1.0);
    mean += prob * ms;
    var += prob * prob * vs / m;
  }
  e.mean = cube_volume * mean;
  e.std_error = cube_volume * std::sqrt(var);
  return e;
}

// Quadrature when it is affordable, stratified Monte Carlo otherwise.
inline McEstimate gaussian_norm_check(int n, std::uint64_t budget,
                                      std::uint64_t seed, int workers = 0) {
  if (n >= 1 && n <= 3) {
    McEstimate e;
    e.mean = gaussian_norm_quadrature(n);
    e.std_error = 0.0;
    std::uint64_t evals = 1;
    for (int i = 0; i < n; ++i) evals *= 48;
    e.samples = evals;
    e.seed = seed;
    return e;
  }
  return gaussian_norm_mc(n, budget, seed, workers);
}

// Hit-or-miss volume of the unit ball from uniform cube samples, scaled by
// the cube volume 2^N. The hit rate collapses beyond N = 12.
inline McEstimate mc_ball_volume(int n, std::uint64_t budget,
                                 std::uint64_t seed, int workers = 0) {
  if (n < 2 || n > 12)
    throw resource_limit_error("mc_ball_volume: supported for 2 <= N <= 12");
  if (budget == 0) throw domain_error("mc_ball_volume: budget must be > 0");
  const CounterRng rng(seed);
  auto acc = detail::blocked_reduce<detail::CountAcc>(
      budget, workers,
      [&](std::uint64_t begin, std::uint64_t end) {
        detail::CountAcc a;
        std::array<double, 12> u;
        for (std::uint64_t i = begin; i < end; ++i) {
          rng.fill_uniform(i, u.data(), static_cast<std::size_t>(n));
          double r2 = 0.0;
          for (int j = 0; j < n; ++j) {
            const double x = 2.0 * u[static_cast<std::size_t>(j)] - 1.0;
            r2 += x * x;
          }
          if (r2 <= 1.0) ++a.hits;
        }
        return a;
      });
  return detail::binomial_estimate(acc.hits, budget, seed,
                                   std::pow(2.0, n));
}

// Fraction of the ball within delta of the boundary, sampling the exact
// radial law r = U^(1/N) of the uniform ball.
inline McEstimate mc_shell_fraction(int n, double delta, std::uint64_t budget,
                                    std::uint64_t seed, int workers = 0) {
  if (n < 1) throw domain_error("mc_shell_fraction: N must be >= 1");
  if (!(delta >= 0.0 && delta <= 1.0))
    throw domain_error("mc_shell_fraction: delta must lie in [0,1]");
  if (budget == 0) throw domain_error("mc_shell_fraction: budget must be > 0");
  const CounterRng rng(seed);
  const double inv_n = 1.0 / static_cast<double>(n);
  const double cut = 1.0 - delta;
  auto acc = detail::blocked_reduce<detail::CountAcc>(
      budget, workers,
      [&](std::uint64_t begin, std::uint64_t end) {
        detail::CountAcc a;
        for (std::uint64_t i = begin; i < end; ++i) {
          const double u = CounterRng::to_unit(rng.words(i, 0)[0]);
          if (std::pow(u, inv_n) > cut) ++a.hits;
        }
        return a;
      });
  return detail::binomial_estimate(acc.hits, budget, seed, 1.0);
}

// Sampled witness of the box leak: fraction of points drawn uniformly from
// the central ball (radius sqrt(N)-1) whose max coordinate magnitude exceeds
// the box half-side 1. The radial factor is strictly below 1 for every
// sample, so dimensions with radius <= 1 can never register a hit.
inline McEstimate mc_leak_fraction(int n, std::uint64_t budget,
                                   std::uint64_t seed, int workers = 0) {
  if (n < 2) throw domain_error("mc_leak_fraction: N must be >= 2");
  if (budget == 0) throw domain_error("mc_leak_fraction: budget must be > 0");
  const CounterRng rng(seed);
  const double rho = inner_radius(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  const std::uint32_t radius_slot = static_cast<std::uint32_t>((n + 1) / 2);
  auto acc = detail::blocked_reduce<detail::CountAcc>(
      budget, workers,
      [&](std::uint64_t begin, std::uint64_t end) {
        detail::CountAcc a;
        std::vector<double> g(static_cast<std::size_t>(n));
        for (std::uint64_t i = begin; i < end; ++i) {
          double norm2 = 0.0, maxabs = 0.0;
          for (int j = 0; j < n; j += 2) {
            const auto w = rng.words(i, static_cast<std::uint32_t>(j / 2));
            const auto pair =
                gaussian_pair(CounterRng::to_unit(w[0]),
                              CounterRng::to_unit(w[1]));
            g[static_cast<std::size_t>(j)] = pair[0];
            if (j + 1 < n) g[static_cast<std::size_t>(j) + 1] = pair[1];
          }
          for (int j = 0; j < n; ++j) {
            const double v = g[static_cast<std::size_t>(j)];
            norm2 += v * v;
            maxabs = std::max(maxabs, std::fabs(v));
          }
          if (norm2 == 0.0) continue;  // untestably rare; point at origin
          const double u =
              CounterRng::to_unit(rng.words(i, radius_slot)[0]);
          const double radial = std::pow(u, inv_n);
          // maxabs/sqrt(norm2) <= 1 and radial < 1 hold exactly in the reals;
          // clamp so rounding can never fake a hit when rho <= 1.
          const double frac =
              std::min(radial * (maxabs / std::sqrt(norm2)), 1.0);
          if (rho * frac > 1.0) ++a.hits;
        }
        return a;
      });
  return detail::binomial_estimate(acc.hits, budget, seed, 1.0);
}

// Per-coordinate sample means over the k-skeleton: pick a face with
// probability proportional to its k-volume (1 : sqrt(k+1) per the Gram
// weights in skeleton_centroid_oracle), then a uniform point inside it via
// exponential-spacing barycentric weights.
inline std::vector<McEstimate> mc_skeleton_centroid(int n, int k,
                                                    std::uint64_t budget,
                                                    std::uint64_t seed,
                                                    int workers = 0) {
  if (n < 1 || n > 10)
    throw resource_limit_error(
        "mc_skeleton_centroid: sampling is limited to 1 <= N <= 10");
  if (k < 0 || k > n)
    throw domain_error("mc_skeleton_centroid: k must lie in 0..N");
  if (budget == 0)
    throw domain_error("mc_skeleton_centroid: budget must be > 0");
  const CounterRng rng(seed);
  const double corner_weight =
      static_cast<double>(detail::binomial_coeff(n, k));
  const double regular_weight =
      static_cast<double>(detail::binomial_coeff(n, k + 1)) *
      std::sqrt(static_cast<double>(k + 1));
  const double p_corner = corner_weight / (corner_weight + regular_weight);

  auto acc = detail::blocked_reduce<detail::VectorMomentAcc>(
      budget, workers,
      [&](std::uint64_t begin, std::uint64_t end) {
        detail::VectorMomentAcc a;
        a.resize(static_cast<std::size_t>(n));
        std::array<double, 32> u;
        std::array<int, 10> pool;
        std::array<double, 11> bary;
        std::array<int, 11> vert;  // -1 = origin
        for (std::uint64_t i = begin; i < end; ++i) {
          const std::size_t need = 1 + static_cast<std::size_t>(k + 1) * 2;
          rng.fill_uniform(i, u.data(), need);
          std::size_t next_u = 0;
          const bool corner = u[next_u++] < p_corner;
          const int picks = corner ? k : k + 1;
          for (int j = 0; j < n; ++j) pool[static_cast<std::size_t>(j)] = j + 1;
          int m = n;
          int nv = 0;
          if (corner) vert[static_cast<std::size_t>(nv++)] = -1;
          for (int j = 0; j < picks; ++j) {
            const int idx = std::min(
                static_cast<int>(u[next_u++] * m), m - 1);
            vert[static_cast<std::size_t>(nv++)] =
                pool[static_cast<std::size_t>(idx)];
            pool[static_cast<std::size_t>(idx)] =
                pool[static_cast<std::size_t>(m - 1)];
            --m;
          }
          double total = 0.0;
          for (int j = 0; j <= k; ++j) {
            const double e = -std::log(1.0 - u[next_u++]);
            bary[static_cast<std::size_t>(j)] = e;
            total += e;
          }
          for (int j = 0; j <= k; ++j) {
            const int v = vert[static_cast<std::size_t>(j)];
            if (v < 0) continue;
            const double w = bary[static_cast<std::size_t>(j)] / total;
            a.sum[static_cast<std::size_t>(v - 1)] += w;
            a.sumsq[static_cast<std::size_t>(v - 1)] += w * w;
          }
        }
        return a;
      });

  std::vector<McEstimate> out(static_cast<std::size_t>(n));
  const double nn = static_cast<double>(budget);
  for (std::size_t j = 0; j < out.size(); ++j) {
    McEstimate& e = out[j];
    e.samples = budget;
    e.seed = seed;
    e.mean = acc.sum[j] / nn;
    const double var = (acc.sumsq[j] - acc.sum[j] * acc.sum[j] / nn) /
                       (nn - 1.0);
    e.std_error = std::sqrt(std::max(var, 0.0) / nn);
  }
  return out;
}

}  // namespace hdc
