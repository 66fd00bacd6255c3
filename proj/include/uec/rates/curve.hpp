#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "uec/errors.hpp"
#include "uec/rates/exponent.hpp"
#include "uec/rates/primal.hpp"
#include "uec/rates/tail.hpp"

namespace uec::rates {

struct RatePoint {
  double rate = 0.0;  ///< bits per copy
  Side side = Side::Low;
  double parametric = 0.0;
  std::optional<double> primal;
  std::optional<double> bh;
  std::optional<double> tail_estimate;
};

/// Exponents sampled on an evenly spaced rate grid; R strictly increasing.
struct RateCurve {
  young::Spectrum spectrum;
  std::vector<RatePoint> points;
};

struct CurveOptions {
  double rate_min = 0.0;
  double rate_max = 0.0;
  int steps = 2;
  bool with_primal = true;
  bool with_bh = true;
  /// When > 0, also reports -(1/n) log2 of the exact tail at this n.
  int tail_copies = 0;
};

/// Rates below H(p) use the low-side formulas and rates at or above H(p) the
/// high-side ones. Rates above log2(support) have an infinite exponent.
inline RateCurve rate_curve(const young::Spectrum& p, const CurveOptions& opt) {
  if (opt.steps < 2) throw InputError("rate curve needs at least two steps");
  if (!(opt.rate_min < opt.rate_max)) throw InputError("rate range must satisfy rate_min < rate_max");
  if (opt.rate_min < 0.0) throw InputError("rates must be nonnegative");
  const double h = shannon_entropy(p);
  const double top = std::log2(static_cast<double>(p.support()));
  RateCurve curve{p, {}};
  for (int i = 0; i < opt.steps; ++i) {
    RatePoint pt;
    pt.rate = opt.rate_min + (opt.rate_max - opt.rate_min) * i / (opt.steps - 1);
    pt.side = pt.rate < h ? Side::Low : Side::High;
    if (pt.side == Side::High && pt.rate > top + kRateSlack) {
      pt.parametric = std::numeric_limits<double>::infinity();
      if (opt.with_primal) pt.primal = pt.parametric;
    } else {
      pt.parametric = exponent_parametric(pt.rate, p, pt.side);
      if (opt.with_primal && p.dim() <= kMaxPrimalDimension) pt.primal = exponent_primal(pt.rate, p, pt.side).exponent;
    }
    if (opt.with_bh && pt.side == Side::Low) pt.bh = bh_exponent(pt.rate, p);
    if (opt.tail_copies > 0)
      pt.tail_estimate = tail_probability(opt.tail_copies, p.dim(), p, pt.rate, pt.side).exponent_estimate;
    curve.points.push_back(pt);
  }
  return curve;
}

}  // namespace uec::rates
