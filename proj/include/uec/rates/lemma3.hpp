#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "uec/errors.hpp"
#include "uec/rates/entropy.hpp"
#include "uec/young/dimension.hpp"
#include "uec/young/partition.hpp"

namespace uec::rates {

/// delta_n = ln n! - (n + 1/2) ln n + n, which decreases from 1 toward ln sqrt(2 pi).
inline double stirling_delta(double n) {
  if (!(n >= 1.0)) throw InputError("stirling delta needs n >= 1");
  return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n;
}

/// sup over n >= 1 of delta_n, taken as the maximum over a scan of n = 1..1000.
inline double stirling_delta_sup() {
  double best = 0.0;
  for (int n = 1; n <= 1000; ++n) best = std::max(best, stirling_delta(n));
  return best;
}

inline int lemma3_max_copies(int d) { return d <= 3 ? 60 : 40; }

struct Lemma3Report {
  int d = 0;
  int n_max = 0;
  /// Coefficient of ln(n+d)/n as stated, (2d^2 + d)/2, and as the derivation
  /// produces it, (3d^2 - 2d)/2. The bound uses the larger.
  double coefficient_stated = 0.0;
  double coefficient_derived = 0.0;
  double coefficient = 0.0;
  double constant = 0.0;          ///< C = d sup_n delta_n
  double worst_slack = 0.0;       ///< min over (n, lambda) of bound - lhs
  young::Partition worst_shape;
  int worst_n = 0;
  double worst_slack_stated = 0.0;  ///< same minimum with the stated coefficient
  std::vector<double> max_lhs;      ///< index n - 1: max over lambda of the lhs
  bool holds = false;
};

/// Scans |(1/n) ln dim V_lambda - H(lambda/n)| (nats) against
/// coefficient * ln(n+d)/n + C/n for all n <= n_max, lambda with <= d rows.
inline Lemma3Report lemma3_check(int n_max, int d) {
  if (d < 1) throw InputError("d must be >= 1");
  if (n_max < 1) throw InputError("n_max must be >= 1");
  if (d > 4 || n_max > lemma3_max_copies(d)) throw GuardError("lemma3 scan limited to d <= 4, n <= 60 (40 for d = 4)");
  Lemma3Report rep;
  rep.d = d;
  rep.n_max = n_max;
  rep.coefficient_stated = (2.0 * d * d + d) / 2.0;
  rep.coefficient_derived = (3.0 * d * d - 2.0 * d) / 2.0;
  rep.coefficient = std::max(rep.coefficient_stated, rep.coefficient_derived);
  rep.constant = d * stirling_delta_sup();
  rep.worst_slack = std::numeric_limits<double>::infinity();
  rep.worst_slack_stated = rep.worst_slack;
  for (int n = 1; n <= n_max; ++n) {
    const double scale = std::log(static_cast<double>(n + d)) / n;
    const double bound = rep.coefficient * scale + rep.constant / n;
    const double bound_stated = rep.coefficient_stated * scale + rep.constant / n;
    double max_lhs = 0.0;
    for (const auto& lambda : young::enumerate_partitions(n, d)) {
      std::vector<double> freq;
      for (int part : lambda.parts()) freq.push_back(static_cast<double>(part) / n);
      const double lhs = std::abs(young::log_dim_sn_irrep(lambda, d) / n - entropy_nats(freq));
      max_lhs = std::max(max_lhs, lhs);
      if (bound - lhs < rep.worst_slack) {
        rep.worst_slack = bound - lhs;
        rep.worst_shape = lambda;
        rep.worst_n = n;
      }
      rep.worst_slack_stated = std::min(rep.worst_slack_stated, bound_stated - lhs);
    }
    rep.max_lhs.push_back(max_lhs);
  }
  rep.holds = rep.worst_slack > 0.0;
  return rep;
}

}  // namespace uec::rates
