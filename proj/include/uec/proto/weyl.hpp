#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "uec/errors.hpp"

namespace uec::proto {

using Complex = std::complex<double>;

inline constexpr int kMaxBellSize = 32;

inline void check_bell_size(int D) {
  if (D < 1 || D > kMaxBellSize) throw InputError("Bell size must be in [1, 32]");
}

/// The D^2 unitaries X^a Z^b with X|j> = |j+1 mod D>, Z|j> = w^j |j>.
class WeylOperatorSet {
 public:
  explicit WeylOperatorSet(int D) : D_(D) { check_bell_size(D); }

  [[nodiscard]] int dim() const { return D_; }
  [[nodiscard]] int size() const { return D_ * D_; }

  [[nodiscard]] Eigen::MatrixXcd op(int a, int b) const {
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(D_, D_);
    for (int j = 0; j < D_; ++j) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(b) * j) % D_) / D_;
      w((j + a) % D_, j) = std::polar(1.0, phase);
    }
    return w;
  }

  /// Operator for the flat index m = a D + b.
  [[nodiscard]] Eigen::MatrixXcd op(int m) const { return op(m / D_, m % D_); }

 private:
  int D_;
};

/// Coefficient matrix of (1/sqrt D) sum_j |jj>.
inline Eigen::MatrixXcd bell_resource(int D) {
  check_bell_size(D);
  return Eigen::MatrixXcd::Identity(D, D) / std::sqrt(static_cast<double>(D));
}

/// Coefficient matrix of sum_i sqrt(p_i) |ii>.
inline Eigen::MatrixXcd schmidt_resource(const std::vector<double>& p) {
  const int D = static_cast<int>(p.size());
  check_bell_size(D);
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(D, D);
  for (int i = 0; i < D; ++i) r(i, i) = std::sqrt(p[static_cast<std::size_t>(i)]);
  return r;
}

inline void check_resource(const Eigen::MatrixXcd& resource, int D) {
  if (resource.rows() != D || resource.cols() != D) throw InputError("resource must be D x D");
  if (std::abs(resource.squaredNorm() - 1.0) > 1e-10) throw InputError("resource state is not normalized");
}

}  // namespace uec::proto
