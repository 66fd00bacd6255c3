// Uses the Bell pair left by a three-copy concentration run to teleport a
// random qubit and to send two classical bits by dense coding.

#include <cstdio>
#include <random>

#include "uec/exact.hpp"
#include "uec/proto.hpp"

int main() {
  using namespace uec;
  const auto outcomes = exact::concentrate(exact::build_input_state(young::Spectrum({0.75, 0.25}), 3));
  for (const auto& o : outcomes) {
    if (o.bell_size != 2) continue;
    std::printf("outcome %s, probability %.4f, Bell fidelity %.12f\n", o.shape.to_string().c_str(), o.probability, o.fidelity);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(o.v_state);
    const Eigen::VectorXcd top = es.eigenvectors().col(3);
    Eigen::MatrixXcd resource(2, 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) resource(a, b) = top(a * 2 + b);

    std::mt19937_64 rng(7);
    Eigen::VectorXcd psi(2);
    psi << proto::Complex(0.6, 0.0), proto::Complex(0.0, 0.8);
    for (const auto& br : proto::teleport_branches(psi, resource))
      std::printf("  teleport branch (a=%d, b=%d): p = %.3f, fidelity %.12f\n", br.a, br.b, br.probability, br.fidelity);
    std::printf("  classical bits per teleported qubit: %.0f\n", proto::teleport_resources(o.bell_size).classical_bits);
    for (int m = 0; m < 4; ++m)
      std::printf("  dense coding: sent %d, decoded %d\n", m, proto::simulate_dense_coding(resource, m, rng));
  }
}
