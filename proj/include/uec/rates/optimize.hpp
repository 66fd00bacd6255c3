#pragma once

#include <cmath>
#include <functional>

namespace uec::rates {

struct Maximum {
  double arg = 0.0;
  double value = 0.0;
};

/// Maximizes a unimodal function on [lo, hi]: coarse grid, then golden-section
/// search on the bracket around the best grid point. Endpoints are candidates.
inline Maximum maximize_unimodal(const std::function<double(double)>& f, double lo, double hi, int grid = 256) {
  Maximum best{lo, f(lo)};
  int best_k = 0;
  for (int k = 1; k < grid; ++k) {
    const double x = lo + (hi - lo) * k / (grid - 1);
    const double v = f(x);
    if (v > best.value) {
      best = {x, v};
      best_k = k;
    }
  }
  double a = lo + (hi - lo) * std::max(best_k - 1, 0) / (grid - 1);
  double b = lo + (hi - lo) * std::min(best_k + 1, grid - 1) / (grid - 1);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-14 * (1.0 + std::abs(a)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

}  // namespace uec::rates
