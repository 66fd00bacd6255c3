#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "uec/errors.hpp"
#include "uec/young/partition.hpp"

namespace uec::exact {

inline constexpr int kMaxSchurTransformQubits = 12;

/// Orthogonal change of basis on (C^2)^{(x)n} into the coupled total-spin
/// basis. Row r of `matrix` is a coupled basis vector in computational
/// coordinates, so `matrix * v` gives Schur-basis coordinates.
///
/// Blocks are ordered by shape (descending lexicographic, i.e. decreasing
/// total spin). Inside a block, row offset + u * dim_v + v carries magnetic
/// index u (m = j - u) of U_lambda and coupling path v of V_lambda.
struct QubitSchurTransform {
  struct Block {
    young::Partition shape;
    int offset = 0;
    int dim_u = 0;
    int dim_v = 0;
  };

  int n = 0;
  Eigen::MatrixXd matrix;
  std::vector<Block> blocks;

  [[nodiscard]] const Block& block(const young::Partition& shape) const {
    for (const auto& b : blocks)
      if (b.shape == shape) return b;
    throw InputError("shape not present in the qubit Schur transform");
  }
};

/// Couples qubits left to right with SU(2) Clebsch-Gordan coefficients
/// (Condon-Shortley phases). |0> is spin up.
inline QubitSchurTransform qubit_schur_transform(int n) {
  if (n < 1) throw InputError("qubit Schur transform needs n >= 1");
  if (n > kMaxSchurTransformQubits) throw GuardError("qubit Schur transform limited to n <= 12");

  // A multiplet: total spin 2j = twice_j, states[u] has 2m = twice_j - 2u.
  struct Multiplet {
    int twice_j;
    std::vector<Eigen::VectorXd> states;
  };

  std::vector<Multiplet> level;
  {
    Eigen::VectorXd up = Eigen::VectorXd::Zero(2), down = Eigen::VectorXd::Zero(2);
    up(0) = 1.0;
    down(1) = 1.0;
    level.push_back({1, {up, down}});
  }

  for (int t = 1; t < n; ++t) {
    const Eigen::Index old_dim = Eigen::Index{1} << t;
    std::vector<Multiplet> next;
    for (int sign : {+1, -1}) {  // raise first, so larger spins come first within a parent
      for (const auto& parent : level) {
        const int jp = parent.twice_j;
        const int j = jp + sign;
        if (j < 0) continue;
        Multiplet child{j, {}};
        for (int m = j; m >= -j; m -= 2) {
          Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * old_dim);
          const double denom = 2.0 * (jp + 1);
          // spin-up new qubit: parent carries m - 1; spin-down: parent carries m + 1.
          double c_up, c_down;
          if (sign > 0) {
            c_up = std::sqrt((jp + m + 1) / denom);
            c_down = std::sqrt((jp - m + 1) / denom);
          } else {
            c_up = -std::sqrt((jp - m + 1) / denom);
            c_down = std::sqrt((jp + m + 1) / denom);
          }
          if (std::abs(m - 1) <= jp) {
            const auto& src = parent.states[static_cast<std::size_t>((jp - (m - 1)) / 2)];
            for (Eigen::Index k = 0; k < old_dim; ++k) v(2 * k) += c_up * src(k);
          }
          if (std::abs(m + 1) <= jp) {
            const auto& src = parent.states[static_cast<std::size_t>((jp - (m + 1)) / 2)];
            for (Eigen::Index k = 0; k < old_dim; ++k) v(2 * k + 1) += c_down * src(k);
          }
          child.states.push_back(std::move(v));
        }
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }

  QubitSchurTransform out;
  out.n = n;
  const Eigen::Index dim = Eigen::Index{1} << n;
  out.matrix = Eigen::MatrixXd::Zero(dim, dim);
  int offset = 0;
  for (int twice_j = n; twice_j >= 0; twice_j -= 2) {
    std::vector<const Multiplet*> paths;
    for (const auto& mult : level)
      if (mult.twice_j == twice_j) paths.push_back(&mult);
    QubitSchurTransform::Block block{young::Partition({(n + twice_j) / 2, (n - twice_j) / 2}), offset,
                                     twice_j + 1, static_cast<int>(paths.size())};
    for (int u = 0; u < block.dim_u; ++u)
      for (int v = 0; v < block.dim_v; ++v)
        out.matrix.row(offset + u * block.dim_v + v) =
            paths[static_cast<std::size_t>(v)]->states[static_cast<std::size_t>(u)].transpose();
    offset += block.dim_u * block.dim_v;
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace uec::exact
