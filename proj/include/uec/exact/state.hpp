#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "uec/errors.hpp"
#include "uec/young/spectrum.hpp"

namespace uec::exact {

using Complex = std::complex<double>;

/// d^n, or 0 if it does not fit comfortably in 63 bits.
inline std::uint64_t local_dimension(int d, int n) {
  std::uint64_t dim = 1;
  for (int k = 0; k < n; ++k) {
    if (dim > (std::uint64_t{1} << 40)) return 0;
    dim *= static_cast<std::uint64_t>(d);
  }
  return dim;
}

inline constexpr std::uint64_t kMaxAmplitudes = std::uint64_t{1} << 26;

/// Pure state on (C^d)^{(x)n} (x) (C^d)^{(x)n}. Amplitude index is a * d^n + b,
/// where a and b are base-d multi-indices with copy 0 as the most significant digit.
class PureBipartiteState {
 public:
  PureBipartiteState(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 1) throw InputError("state needs n >= 0 and d >= 1");
    const std::uint64_t side = local_dimension(d, n);
    if (side == 0 || side * side > kMaxAmplitudes) throw GuardError("state exceeds the 2^26 amplitude guard");
    side_ = static_cast<std::size_t>(side);
    amplitudes_.assign(side_ * side_, Complex{});
  }

  [[nodiscard]] int copies() const { return n_; }
  [[nodiscard]] int local_dim() const { return d_; }
  /// d^n, the dimension of one side.
  [[nodiscard]] std::size_t side_dim() const { return side_; }

  [[nodiscard]] Complex& at(std::size_t a, std::size_t b) { return amplitudes_[a * side_ + b]; }
  [[nodiscard]] Complex at(std::size_t a, std::size_t b) const { return amplitudes_[a * side_ + b]; }
  [[nodiscard]] std::vector<Complex>& amplitudes() { return amplitudes_; }
  [[nodiscard]] const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  [[nodiscard]] double norm_squared() const {
    double s = 0.0;
    for (const auto& z : amplitudes_) s += std::norm(z);
    return s;
  }

  void normalize() {
    const double nrm = std::sqrt(norm_squared());
    if (nrm == 0.0) throw InputError("cannot normalize the zero vector");
    for (auto& z : amplitudes_) z /= nrm;
  }

  /// ||this - other||_2.
  [[nodiscard]] double distance(const PureBipartiteState& other) const {
    double s = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) s += std::norm(amplitudes_[i] - other.amplitudes_[i]);
    return std::sqrt(s);
  }

 private:
  int n_;
  int d_;
  std::size_t side_ = 1;
  std::vector<Complex> amplitudes_;
};

/// (sum_i sqrt(p_i) |i>|i>)^{(x)n} with all A factors first, then all B factors.
inline PureBipartiteState build_input_state(const young::Spectrum& p, int n) {
  PureBipartiteState state(n, p.dim());
  const int d = p.dim();
  for (std::size_t a = 0; a < state.side_dim(); ++a) {
    double amp = 1.0;
    std::size_t rest = a;
    for (int k = 0; k < n; ++k) {
      amp *= std::sqrt(p[rest % static_cast<std::size_t>(d)]);
      rest /= static_cast<std::size_t>(d);
    }
    state.at(a, a) = amp;
  }
  return state;
}

}  // namespace uec::exact
