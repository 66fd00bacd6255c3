#pragma once
// Brute-force references for the rate functions.

#include <cmath>
#include <vector>

#include "oracles/young_oracles.hpp"
#include "uec/young/dimension.hpp"
#include "uec/young/partition.hpp"

namespace uec::oracle {

inline double log_power_sum(double s, const std::vector<double>& p) {
  double acc = 0.0;
  for (double x : p)
    if (x > 0.0) acc += std::pow(x, s);
  return std::log(acc);
}

/// Dense scan of ((1-s)R - psi(s))/s over s (log grid), in bits.
/// Low side scans s in [1, 500] plus the s -> inf limit ln(1/p_1) - R;
/// high side scans s in [1e-7, 1].
inline double scanned_exponent(double rate_bits, const std::vector<double>& p, bool low) {
  const double r = rate_bits * std::log(2.0);
  const double a = low ? 0.0 : std::log(1e-7);
  const double b = low ? std::log(500.0) : 0.0;
  const int steps = 400000;
  double best = low ? std::max(0.0, -std::log(p[0]) - r) : 0.0;
  for (int k = 0; k <= steps; ++k) {
    const double s = std::exp(a + (b - a) * k / steps);
    best = std::max(best, ((1.0 - s) * r - log_power_sum(s, p)) / s);
  }
  return best / std::log(2.0);
}

/// Tail mass from exact integer dimensions and tableau-sum Schur polynomials.
inline double tableau_tail(int n, int d, const std::vector<double>& p, double rate_bits, bool low) {
  double total = 0.0;
  for (const auto& lambda : young::enumerate_partitions(n, d)) {
    const double log2_dim = std::log2(hook_length_dim(lambda).convert_to<double>());
    const bool in = low ? log2_dim <= n * rate_bits + 1e-9 : log2_dim >= n * rate_bits - 1e-9;
    if (in) total += hook_length_dim(lambda).convert_to<double>() * ssyt_schur(lambda, p);
  }
  return total;
}

}  // namespace uec::oracle
