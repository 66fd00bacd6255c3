#pragma once

#include <cmath>
#include <vector>

#include "uec/errors.hpp"
#include "uec/numeric.hpp"
#include "uec/young/dimension.hpp"
#include "uec/young/partition.hpp"
#include "uec/young/schur.hpp"
#include "uec/young/spectrum.hpp"

namespace uec::young {

inline constexpr std::uint64_t kMaxPartitions = 10'000'000;

/// Probability Tr W_lambda rho^{(x)n} = dim V_lambda * s_lambda(p) of the
/// Young-frame outcome lambda.
inline double schur_weyl_prob(const Partition& lambda, const Spectrum& p) {
  const int d = std::max(lambda.rows(), p.dim());
  if (lambda.length() > p.support()) return 0.0;
  SchurEvaluator schur(p);
  const double log_prob = log_big(dim_sn_irrep(lambda, d)) + schur.log_value(lambda);
  return std::min(1.0, std::exp(log_prob));
}

struct DistributionEntry {
  Partition shape;
  double probability = 0.0;
  BigInt dim_v;
  BigInt dim_u;
  /// log2 dim V: the number of ebits in the Bell state this outcome yields.
  double ebits = 0.0;
};

/// Outcome law of the Young-frame measurement on n copies.
struct SchurWeylDistribution {
  int n = 0;
  int d = 0;
  Spectrum spectrum;
  std::vector<DistributionEntry> entries;

  [[nodiscard]] double total_probability() const {
    std::vector<double> ps;
    ps.reserve(entries.size());
    for (const auto& e : entries) ps.push_back(e.probability);
    return pairwise_sum(ps);
  }
};

/// Full outcome distribution over partitions of n with at most d rows,
/// in descending lexicographic order. A spectrum shorter than d is padded
/// with zero eigenvalues.
inline SchurWeylDistribution distribution(int n, int d, const Spectrum& p) {
  if (n < 0) throw InputError("number of copies must be nonnegative");
  if (d < 1) throw InputError("local dimension must be positive");
  if (p.dim() > d) throw InputError("spectrum has more entries than the local dimension");
  if (count_partitions(n, d) > kMaxPartitions) throw GuardError("partition count exceeds 10^7");

  SchurWeylDistribution dist{n, d, p.padded(d), {}};
  const auto primes = primes_up_to(n + d);
  SchurEvaluator schur(p);
  const int support = p.support();
  for (auto& shape : enumerate_partitions(n, d)) {
    DistributionEntry e;
    e.dim_v = detail::dim_sn_factored(shape, primes);
    e.dim_u = dim_su_irrep(shape, d);
    const double log_dim_v = log_big(e.dim_v);
    e.ebits = log_dim_v / kLn2;
    if (shape.length() <= support)
      e.probability = std::min(1.0, std::exp(log_dim_v + schur.log_value(shape)));
    e.shape = std::move(shape);
    dist.entries.push_back(std::move(e));
  }
  return dist;
}

}  // namespace uec::young
