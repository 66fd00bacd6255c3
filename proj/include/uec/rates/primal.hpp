#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "uec/errors.hpp"
#include "uec/rates/exponent.hpp"

namespace uec::rates {

inline constexpr int kMaxPrimalDimension = 4;

struct PrimalResult {
  double exponent = 0.0;        ///< bits per copy
  std::vector<double> minimizer;  ///< optimal q on the support of p, descending
  double grid_step = 0.0;       ///< spacing of the initial simplex grid
};

namespace detail {

inline double primal_grid_step(int k) { return k <= 2 ? 1e-3 : 5e-3; }

/// Calls f on every descending composition of `total` into k parts.
inline void for_each_ordered_point(int total, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  std::function<void(int, int, int)> rec = [&](int i, int remaining, int cap) {
    if (i == k - 1) {
      if (remaining <= cap) {
        parts[static_cast<std::size_t>(i)] = remaining;
        f(parts);
      }
      return;
    }
    const int lo = (remaining + (k - i) - 1) / (k - i);
    for (int v = std::min(cap, remaining); v >= lo; --v) {
      parts[static_cast<std::size_t>(i)] = v;
      rec(i + 1, remaining - v, v);
    }
  };
  rec(0, total, total);
}

/// Moves q along the segment toward `target` until H(q) meets the constraint.
/// `below` selects H <= r (target is a point mass) versus H >= r (target is uniform).
inline std::vector<double> project_entropy(const std::vector<double>& q, const std::vector<double>& target,
                                           double r, bool below) {
  auto ok = [&](const std::vector<double>& x) {
    const double h = entropy_nats(x);
    return below ? h <= r : h >= r;
  };
  if (ok(q)) return q;
  auto mix = [&](double t) {
    std::vector<double> x(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) x[i] = (1.0 - t) * q[i] + t * target[i];
    return x;
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mix(mid)) ? hi : lo) = mid;
  }
  return mix(hi);
}

/// Plain Nelder-Mead minimizer.
inline std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                       std::vector<double> start, double scale, int max_iter = 4000) {
  const std::size_t m = start.size();
  std::vector<std::vector<double>> pts(m + 1, start);
  for (std::size_t i = 0; i < m; ++i) pts[i + 1][i] += scale;
  std::vector<double> vals(m + 1);
  for (std::size_t i = 0; i <= m; ++i) vals[i] = f(pts[i]);
  auto along = [&](const std::vector<double>& c, const std::vector<double>& x, double t) {
    std::vector<double> y(m);
    for (std::size_t j = 0; j < m; ++j) y[j] = c[j] + t * (x[j] - c[j]);
    return y;
  };
  for (int it = 0; it < max_iter; ++it) {
    std::vector<std::size_t> order(m + 1);
    for (std::size_t i = 0; i <= m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> sp;
    std::vector<double> sv;
    for (auto i : order) {
      sp.push_back(pts[i]);
      sv.push_back(vals[i]);
    }
    pts = std::move(sp);
    vals = std::move(sv);
    double spread = 0.0;
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 0; j < m; ++j) spread = std::max(spread, std::abs(pts[i][j] - pts[0][j]));
    if (spread < 1e-13) break;

    std::vector<double> centroid(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) centroid[j] += pts[i][j] / static_cast<double>(m);
    const auto reflected = along(centroid, pts[m], -1.0);
    const double fr = f(reflected);
    if (fr < vals[0]) {
      const auto expanded = along(centroid, pts[m], -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        pts[m] = expanded;
        vals[m] = fe;
      } else {
        pts[m] = reflected;
        vals[m] = fr;
      }
    } else if (fr < vals[m - 1]) {
      pts[m] = reflected;
      vals[m] = fr;
    } else {
      const auto contracted = along(centroid, pts[m], 0.5);
      const double fc = f(contracted);
      if (fc < vals[m]) {
        pts[m] = contracted;
        vals[m] = fc;
      } else {
        for (std::size_t i = 1; i <= m; ++i) {
          pts[i] = along(pts[0], pts[i], 0.5);
          vals[i] = f(pts[i]);
        }
      }
    }
  }
  return pts[static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin())];
}

}  // namespace detail

/// Failure exponent as a divergence minimization, bits per copy:
///   low:  inf { D(q||p) : H(q) <= R }
///   high: inf { D(q||p) : H(q) >= R }
/// A grid over the ordered simplex (restricted to the support of p) seeds a
/// Nelder-Mead polish. Grid points outside the constraint set are pulled onto
/// its boundary, toward a point mass (low) or the uniform vector (high).
inline PrimalResult exponent_primal(double rate_bits, const Spectrum& p, Side side) {
  if (p.dim() > kMaxPrimalDimension) throw GuardError("primal exponent is limited to d <= 4");
  detail::check_side(rate_bits, p, side);
  const Spectrum ps = p.without_zeros();
  const auto pv = ps.values();
  const int k = ps.dim();
  const double r = std::max(rate_bits, 0.0) * kLn2;
  const bool below = side == Side::Low;
  std::vector<double> target(static_cast<std::size_t>(k), below ? 0.0 : 1.0 / k);
  if (below) target[0] = 1.0;

  auto objective = [&](std::vector<double> q) {
    std::sort(q.begin(), q.end(), std::greater<>());
    const auto x = detail::project_entropy(q, target, r, below);
    return relative_entropy_nats(x, pv);
  };

  PrimalResult out;
  out.grid_step = detail::primal_grid_step(k);
  if (k == 1) {
    out.minimizer = {1.0};
    return out;
  }
  const int total = static_cast<int>(std::lround(1.0 / out.grid_step));
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_q;
  detail::for_each_ordered_point(total, k, [&](const std::vector<int>& parts) {
    std::vector<double> q(parts.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = parts[i] / static_cast<double>(total);
    const double v = objective(q);
    if (v < best) {
      best = v;
      best_q = q;
    }
  });

  // Polish over the free coordinates q_2..q_k.
  auto embed = [&](const std::vector<double>& tail) {
    std::vector<double> q(static_cast<std::size_t>(k));
    double rest = 1.0;
    for (std::size_t i = 0; i < tail.size(); ++i) {
      q[i + 1] = tail[i];
      rest -= tail[i];
    }
    q[0] = rest;
    return q;
  };
  auto polished = [&](const std::vector<double>& tail) {
    const auto q = embed(tail);
    for (double x : q)
      if (x < 0.0) return std::numeric_limits<double>::infinity();
    return objective(q);
  };
  const auto tail = detail::nelder_mead(polished, std::vector<double>(best_q.begin() + 1, best_q.end()),
                                        out.grid_step);
  if (polished(tail) < best) {
    best = polished(tail);
    best_q = embed(tail);
  }
  std::sort(best_q.begin(), best_q.end(), std::greater<>());
  out.minimizer = detail::project_entropy(best_q, target, r, below);
  out.exponent = best / kLn2;
  return out;
}

}  // namespace uec::rates
