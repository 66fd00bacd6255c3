#pragma once

#include <vector>

#include <Eigen/Dense>

#include "uec/errors.hpp"
#include "uec/exact/measure.hpp"
#include "uec/exact/schur_transform.hpp"
#include "uec/exact/state.hpp"

namespace uec::exact {

struct ConcentrationOutcome {
  young::Partition shape;
  /// dim V_lambda: size of the maximally entangled state left on V_A (x) V_B.
  int bell_size = 0;
  /// <Phi|rho_V|Phi> against (1/sqrt(D)) sum_v |v>|v>.
  double fidelity = 0.0;
  double probability = 0.0;
  /// Reduced state on V_A (x) V_B, index (v_A * D + v_B).
  Eigen::MatrixXcd v_state;
};

/// Full qubit protocol: rotate both sides into the Schur basis, keep the
/// matched block lambda, trace out U_A (x) U_B and compare the V_A (x) V_B
/// state with the canonical maximally entangled state.
inline std::vector<ConcentrationOutcome> concentrate(const PureBipartiteState& state) {
  if (state.local_dim() != 2) throw UnsupportedDimensionError("concentrate is implemented for qubits (d = 2) only");
  if (state.copies() > kMaxMeasureCopies) throw GuardError("concentrate limited to n <= 6");
  if (state.copies() == 0) throw InputError("concentrate needs at least one copy");

  const auto transform = qubit_schur_transform(state.copies());
  const auto dim = static_cast<Eigen::Index>(state.side_dim());
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      state.amplitudes().data(), dim, dim);
  const Eigen::MatrixXcd t = transform.matrix.cast<Complex>();
  const Eigen::MatrixXcd rotated = t * m * t.transpose();

  std::vector<ConcentrationOutcome> out;
  for (const auto& blk : transform.blocks) {
    const int size = blk.dim_u * blk.dim_v;
    const Eigen::MatrixXcd b = rotated.block(blk.offset, blk.offset, size, size);
    const double prob = b.squaredNorm();
    if (prob <= 1e-14) continue;
    const int dv = blk.dim_v;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dv * dv, dv * dv);
    for (int u = 0; u < blk.dim_u; ++u) {
      for (int up = 0; up < blk.dim_u; ++up) {
        // Amplitude vector over (v_A, v_B) for fixed (u_A, u_B).
        Eigen::VectorXcd psi(dv * dv);
        for (int v = 0; v < dv; ++v)
          for (int w = 0; w < dv; ++w) psi(v * dv + w) = b(u * dv + v, up * dv + w);
        rho += psi * psi.adjoint();
      }
    }
    rho /= prob;
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(dv * dv);
    for (int v = 0; v < dv; ++v) phi(v * dv + v) = 1.0 / std::sqrt(static_cast<double>(dv));
    const double fidelity = (phi.adjoint() * rho * phi)(0, 0).real();
    out.push_back({blk.shape, dv, fidelity, prob, std::move(rho)});
  }
  return out;
}

}  // namespace uec::exact
