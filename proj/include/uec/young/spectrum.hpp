#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "uec/errors.hpp"
#include "uec/numeric.hpp"

namespace uec::young {

/// Eigenvalues of the reduced state, sorted descending and summing to one.
class Spectrum {
 public:
  static constexpr double kSumTolerance = 1e-12;

  Spectrum() = default;

  /// Accepts values in any order; rejects negatives and |sum - 1| > tolerance.
  /// Values passing the check are rescaled so the stored sum is exact to rounding.
  explicit Spectrum(std::vector<double> values, double tolerance = kSumTolerance)
      : probs_(std::move(values)) {
    if (probs_.empty()) throw InputError("spectrum must have at least one entry");
    for (double p : probs_) {
      if (!std::isfinite(p) || p < 0.0) throw InputError("spectrum entries must be finite and nonnegative");
    }
    const double total = pairwise_sum(probs_);
    if (std::abs(total - 1.0) > tolerance)
      throw InputError("spectrum does not sum to one");
    for (double& p : probs_) p /= total;
    std::sort(probs_.begin(), probs_.end(), std::greater<>());
  }

  /// Rescales arbitrary nonnegative weights onto the simplex.
  static Spectrum normalized(std::vector<double> weights) {
    double total = 0.0;
    for (double w : weights) {
      if (!std::isfinite(w) || w < 0.0) throw InputError("spectrum entries must be finite and nonnegative");
      total += w;
    }
    if (total <= 0.0) throw InputError("spectrum has zero total weight");
    for (double& w : weights) w /= total;
    return Spectrum(std::move(weights), 1e-9);
  }

  static Spectrum uniform(int d) {
    return Spectrum(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d), 1e-9);
  }

  [[nodiscard]] int dim() const { return static_cast<int>(probs_.size()); }
  [[nodiscard]] double operator[](std::size_t i) const { return probs_[i]; }
  [[nodiscard]] std::span<const double> values() const { return probs_; }

  /// Number of strictly positive eigenvalues.
  [[nodiscard]] int support() const {
    return static_cast<int>(std::count_if(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; }));
  }

  /// Same spectrum with zero eigenvalues removed.
  [[nodiscard]] Spectrum without_zeros() const {
    Spectrum s;
    for (double p : probs_)
      if (p > 0.0) s.probs_.push_back(p);
    return s;
  }

  /// Pads with zero eigenvalues up to dimension d.
  [[nodiscard]] Spectrum padded(int d) const {
    if (d < dim()) throw InputError("cannot pad a spectrum to a smaller dimension");
    Spectrum s = *this;
    s.probs_.resize(static_cast<std::size_t>(d), 0.0);
    return s;
  }

 private:
  std::vector<double> probs_;
};

}  // namespace uec::young
