#pragma once

#include <cmath>
#include <vector>

#include "uec/numeric.hpp"
#include "uec/young/distribution.hpp"

namespace uec::proto {

using young::Partition;
using young::Spectrum;

struct YieldOutcome {
  Partition shape;
  double probability = 0.0;
  double ebits = 0.0;  ///< log2 dim V
  BigInt bell_size;    ///< dim V
};

struct ConcentrationYield {
  int n = 0;
  int d = 0;
  Spectrum spectrum;
  std::vector<YieldOutcome> outcomes;
  double mean_ebits_per_copy = 0.0;
};

/// Bell-state yield of the universal protocol on n copies: one maximally
/// entangled state of size dim V per outcome.
inline ConcentrationYield concentration_yield(int n, int d, const Spectrum& p) {
  auto dist = young::distribution(n, d, p);
  ConcentrationYield y{n, d, p, {}, 0.0};
  std::vector<double> terms;
  for (auto& e : dist.entries) {
    terms.push_back(e.probability * e.ebits);
    y.outcomes.push_back({std::move(e.shape), e.probability, e.ebits, std::move(e.dim_v)});
  }
  y.mean_ebits_per_copy = n > 0 ? pairwise_sum(terms) / n : 0.0;
  return y;
}

struct TeleportCost {
  double qubits = 0.0;
  double classical_bits = 0.0;
};

/// A size-D Bell pair teleports log2 D qubits for 2 log2 D classical bits.
inline TeleportCost teleport_resources(const BigInt& bell_size) {
  if (bell_size < 1) throw InputError("Bell size must be >= 1");
  const double q = log2_big(bell_size);
  return {q, 2.0 * q};
}

}  // namespace uec::proto
