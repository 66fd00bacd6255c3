#pragma once

#include <cmath>

#include "uec/errors.hpp"
#include "uec/rates/entropy.hpp"
#include "uec/rates/optimize.hpp"

namespace uec::rates {

/// Which tail of the Bell-size distribution: dim V <= 2^{nR} (Low) or >= (High).
enum class Side { Low, High };

inline constexpr double kRateSlack = 1e-12;
inline constexpr double kHighSideEpsilon = 1e-6;

namespace detail {

inline void check_side(double rate_bits, const Spectrum& p, Side side) {
  const double h = shannon_entropy(p);
  if (!(rate_bits >= -kRateSlack)) throw InputError("rate must be nonnegative");
  if (side == Side::Low && rate_bits > h + kRateSlack) throw InputError("low side requires R <= H(p)");
  if (side == Side::High) {
    if (rate_bits < h - kRateSlack) throw InputError("high side requires R >= H(p)");
    if (rate_bits > std::log2(static_cast<double>(p.support())) + kRateSlack)
      throw InputError("high side requires R <= log2(support size)");
  }
}

}  // namespace detail

/// Failure exponent in parametric form, bits per copy:
///   low:  sup_{s >= 1}     ((1-s)R - psi(s)) / s
///   high: sup_{0 < s <= 1} ((1-s)R - psi(s)) / s
/// The low side is searched over alpha = 1/s in [0, 1], where the objective
/// (alpha - 1)R - alpha psi(1/alpha) is concave and alpha = 0 is the s -> inf limit
/// ln(1/p_1) - R. The high side is searched over s in [1e-6, 1].
inline double exponent_parametric(double rate_bits, const Spectrum& p, Side side) {
  detail::check_side(rate_bits, p, side);
  if (std::abs(rate_bits - shannon_entropy(p)) <= kRateSlack) return 0.0;
  const double r = rate_bits * kLn2;
  if (side == Side::Low) {
    auto objective = [&](double alpha) { return (alpha - 1.0) * r - scaled_psi(alpha, p); };
    return std::max(0.0, maximize_unimodal(objective, 0.0, 1.0).value) / kLn2;
  }
  // Unimodal in log s because the objective is concave in 1/s.
  auto objective = [&](double log_s) {
    const double s = std::exp(log_s);
    return ((1.0 - s) * r - psi(s, p)) / s;
  };
  return std::max(0.0, maximize_unimodal(objective, std::log(kHighSideEpsilon), 0.0).value) / kLn2;
}

/// Burnashev-Holevo random coding exponent sup_{1 <= s <= 2} (1-s)R - psi(s), bits.
inline double bh_exponent(double rate_bits, const Spectrum& p) {
  if (rate_bits > shannon_entropy(p) + kRateSlack) throw InputError("Burnashev-Holevo exponent requires R <= H(p)");
  const double r = rate_bits * kLn2;
  auto objective = [&](double s) { return (1.0 - s) * r - psi(s, p); };
  return std::max(0.0, maximize_unimodal(objective, 1.0, 2.0).value) / kLn2;
}

}  // namespace uec::rates
