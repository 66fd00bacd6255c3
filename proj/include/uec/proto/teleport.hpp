#pragma once

#include <cmath>
#include <vector>

#include "uec/numeric.hpp"
#include "uec/proto/weyl.hpp"
#include "uec/young/rsk.hpp"

namespace uec::proto {

struct TeleportBranch {
  int a = 0;  ///< X exponent announced by the sender
  int b = 0;  ///< Z exponent
  double probability = 0.0;
  double fidelity = 0.0;  ///< after the receiver applies X^a Z^b
};

/// Every outcome of the generalized Bell measurement on (input, sender half),
/// with the receiver's corrected state compared to the input.
/// `resource` is the coefficient matrix R of sum_jk R_jk |j>_A |k>_B.
inline std::vector<TeleportBranch> teleport_branches(const Eigen::VectorXcd& input, const Eigen::MatrixXcd& resource) {
  const int D = static_cast<int>(input.size());
  const WeylOperatorSet weyl(D);
  check_resource(resource, D);
  if (std::abs(input.squaredNorm() - 1.0) > 1e-10) throw InputError("input state is not normalized");
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(D));
  std::vector<TeleportBranch> out;
  for (int a = 0; a < D; ++a) {
    for (int b = 0; b < D; ++b) {
      // Bell vector coefficients on (input, A) are W_ab / sqrt D.
      const Eigen::MatrixXcd w = weyl.op(a, b);
      const Eigen::VectorXcd bob = inv_sqrt * resource.transpose() * (w.adjoint() * input);
      TeleportBranch br{a, b, bob.squaredNorm(), 0.0};
      if (br.probability > 1e-300) {
        const Eigen::VectorXcd fixed = w * bob;
        br.fidelity = std::norm(input.dot(fixed)) / br.probability;
      }
      out.push_back(br);
    }
  }
  return out;
}

struct TeleportResult {
  double fidelity = 0.0;
  int a = 0;
  int b = 0;
  double classical_bits = 0.0;
};

/// One run of teleportation over a perfect size-D Bell pair; the branch is
/// drawn from the measurement distribution with `rng`.
template <class Engine>
TeleportResult simulate_teleportation(int D, const Eigen::VectorXcd& input, Engine& rng) {
  check_bell_size(D);
  if (input.size() != D) throw InputError("input dimension must equal the Bell size");
  const auto branches = teleport_branches(input, bell_resource(D));
  const double u = young::uniform_unit(rng);
  double acc = 0.0;
  const TeleportBranch* pick = &branches.back();
  for (const auto& br : branches) {
    acc += br.probability;
    if (u < acc) {
      pick = &br;
      break;
    }
  }
  return {pick->fidelity, pick->a, pick->b, 2.0 * std::log2(static_cast<double>(D))};
}

}  // namespace uec::proto
