#pragma once

#include <cmath>

#include "uec/errors.hpp"
#include "uec/numeric.hpp"
#include "uec/rates/exponent.hpp"
#include "uec/young/dimension.hpp"
#include "uec/young/partition.hpp"
#include "uec/young/schur.hpp"

namespace uec::rates {

/// Slack on the comparison log2 dim V vs nR, covering log-gamma rounding.
inline constexpr double kTailTolerance = 1e-9;

/// Largest n accepted by tail_probability for local dimension d.
inline int tail_max_copies(int d) {
  if (d <= 1) return 1'000'000;
  if (d == 2) return 10'000;
  if (d == 3) return 500;
  if (d == 4) return 80;
  return 30;
}

struct TailResult {
  double probability = 0.0;
  double log2_probability = kNegInf;
  /// -(1/n) log2 probability; +inf for an empty tail.
  double exponent_estimate = 0.0;
};

/// Exact Schur-Weyl mass of { lambda : log2 dim V <= nR } (Low) or >= nR (High).
inline TailResult tail_probability(int n, int d, const young::Spectrum& p, double rate_bits, Side side) {
  if (n < 1) throw InputError("tail needs n >= 1");
  if (p.dim() > d) throw InputError("spectrum dimension exceeds d");
  if (n > tail_max_copies(d)) throw GuardError("tail sum too large for this n and d");
  young::SchurEvaluator schur(p);
  LogSumExp acc;
  const double threshold = n * rate_bits;
  for (const auto& lambda : young::enumerate_partitions(n, d)) {
    if (lambda.length() > schur.support()) continue;
    const double log_dim = young::log_dim_sn_irrep(lambda, d);
    const double log2_dim = log_dim / kLn2;
    const bool in_tail = side == Side::Low ? log2_dim <= threshold + kTailTolerance
                                           : log2_dim >= threshold - kTailTolerance;
    if (in_tail) acc.add(log_dim + schur.log_value(lambda));
  }
  TailResult out;
  const double log_p = std::min(acc.value(), 0.0);
  out.probability = std::exp(log_p);
  out.log2_probability = log_p / kLn2;
  out.exponent_estimate = -out.log2_probability / n;
  return out;
}

}  // namespace uec::rates
