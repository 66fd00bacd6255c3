#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "uec/numeric.hpp"
#include "uec/proto/weyl.hpp"
#include "uec/rates/entropy.hpp"
#include "uec/young/dimension.hpp"
#include "uec/young/rsk.hpp"

namespace uec::proto {

/// Dense-coding code over a Bell pair of size N: M = N^2 messages.
struct DenseCode {
  BigInt M;
  BigInt N;
  double effect_bits = 0.0;  ///< log2(M / N) = log2 N
  std::string encoder = "message m = a*N + b -> X^a Z^b on the sender half";
  std::string decoder = "generalized Bell measurement, outcome (a, b) -> a*N + b";
};

inline DenseCode dense_code_params(const young::Partition& shape) {
  DenseCode code;
  code.N = young::dim_sn_irrep(shape, shape.rows());
  code.M = code.N * code.N;
  code.effect_bits = log2_big(code.N);
  return code;
}

/// Probability of decoding each message given `message` was sent.
inline std::vector<double> dense_decode_distribution(int message, const Eigen::MatrixXcd& resource) {
  const int D = static_cast<int>(resource.rows());
  const WeylOperatorSet weyl(D);
  check_resource(resource, D);
  if (message < 0 || message >= weyl.size()) throw InputError("message out of range [0, D^2)");
  const Eigen::MatrixXcd sent = weyl.op(message) * resource;
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(D));
  std::vector<double> probs(static_cast<std::size_t>(weyl.size()));
  for (int m = 0; m < weyl.size(); ++m)
    probs[static_cast<std::size_t>(m)] = std::norm(inv_sqrt * (weyl.op(m).adjoint() * sent).trace());
  return probs;
}

/// Average decoding error with uniform message prior.
inline double dense_coding_error(const Eigen::MatrixXcd& resource) {
  const int M = static_cast<int>(resource.rows() * resource.rows());
  std::vector<double> miss;
  for (int m = 0; m < M; ++m) miss.push_back(1.0 - dense_decode_distribution(m, resource)[static_cast<std::size_t>(m)]);
  return std::max(0.0, pairwise_sum(miss) / M);
}

/// One dense-coding run; returns the decoded message.
template <class Engine>
int simulate_dense_coding(const Eigen::MatrixXcd& resource, int message, Engine& rng) {
  const auto probs = dense_decode_distribution(message, resource);
  const double u = young::uniform_unit(rng);
  double acc = 0.0;
  for (std::size_t m = 0; m < probs.size(); ++m) {
    acc += probs[m];
    if (u < acc) return static_cast<int>(m);
  }
  return static_cast<int>(probs.size()) - 1;
}

template <class Engine>
int simulate_dense_coding(int D, int message, Engine& rng) {
  return simulate_dense_coding(bell_resource(D), message, rng);
}

/// Entanglement-assisted capacity of a pure resource: H(p) bits.
inline double capacity(const young::Spectrum& p) { return rates::shannon_entropy(p); }

}  // namespace uec::proto
