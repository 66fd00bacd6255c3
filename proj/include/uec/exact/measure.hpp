#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "uec/errors.hpp"
#include "uec/exact/character.hpp"
#include "uec/exact/permutation.hpp"
#include "uec/exact/state.hpp"
#include "uec/young/dimension.hpp"
#include "uec/young/partition.hpp"

namespace uec::exact {

inline constexpr int kMaxMeasureCopies = 6;

struct SpectrumLevel {
  double value = 0.0;
  int multiplicity = 0;
};

/// Squared Schmidt coefficients across the A|B cut, descending, grouped with
/// absolute tolerance 1e-9. Values below 1e-12 are treated as zero and dropped.
inline std::vector<SpectrumLevel> schmidt_spectrum(const PureBipartiteState& state) {
  const auto dim = static_cast<Eigen::Index>(state.side_dim());
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      state.amplitudes().data(), dim, dim);
  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<SpectrumLevel> levels;
  double group_first = 0.0, group_sum = 0.0;
  for (double v : values) {
    if (v < 1e-12) break;
    if (!levels.empty() && group_first - v <= 1e-9) {
      group_sum += v;
      ++levels.back().multiplicity;
      levels.back().value = group_sum / levels.back().multiplicity;
    } else {
      levels.push_back({v, 1});
      group_first = v;
      group_sum = v;
    }
  }
  return levels;
}

/// The group algebra of S_n acting on (C^d)^{(x)n}, with the isotypic
/// projectors P_lambda = (dim V_lambda / n!) sum_sigma chi^lambda(sigma) pi(sigma)
/// applied lazily to vectors.
class IsotypicProjectors {
 public:
  IsotypicProjectors(int n, int d) : n_(n), d_(d) {
    if (n > kMaxMeasureCopies) throw GuardError("isotypic projectors limited to n <= 6");
    if (local_dimension(d, n) == 0 || local_dimension(d, n) * local_dimension(d, n) > kMaxAmplitudes)
      throw GuardError("state exceeds the 2^26 amplitude guard");
    for (const auto& sigma : all_permutations(n)) {
      tables_.push_back(permutation_table(sigma, d));
      classes_.push_back(sigma.cycle_type());
    }
    shapes_ = young::enumerate_partitions(n, d);
    double n_factorial = 1.0;
    for (int k = 2; k <= n; ++k) n_factorial *= k;
    for (const auto& shape : shapes_) {
      std::map<young::Partition, long long> chars;
      std::vector<double> coeffs;
      const double scale = static_cast<double>(young::dim_sn_irrep(shape, d)) / n_factorial;
      for (const auto& cls : classes_) {
        auto it = chars.find(cls);
        if (it == chars.end()) it = chars.emplace(cls, sn_character(shape, cls)).first;
        coeffs.push_back(scale * static_cast<double>(it->second));
      }
      coefficients_.push_back(std::move(coeffs));
    }
  }

  [[nodiscard]] const std::vector<young::Partition>& shapes() const { return shapes_; }

  /// (P_shape on the chosen side) |state>.
  [[nodiscard]] PureBipartiteState apply(std::size_t shape_index, Side side, const PureBipartiteState& state) const {
    PureBipartiteState out(n_, d_);
    const std::size_t dim = state.side_dim();
    const auto& in = state.amplitudes();
    auto& acc = out.amplitudes();
    const auto& coeffs = coefficients_[shape_index];
    for (std::size_t s = 0; s < tables_.size(); ++s) {
      const double c = coeffs[s];
      if (c == 0.0) continue;
      const auto& table = tables_[s];
      if (side == Side::A) {
        for (std::size_t a = 0; a < dim; ++a) {
          const std::size_t src = a * dim, dst = table[a] * dim;
          for (std::size_t b = 0; b < dim; ++b) acc[dst + b] += c * in[src + b];
        }
      } else {
        for (std::size_t a = 0; a < dim; ++a) {
          const std::size_t row = a * dim;
          for (std::size_t b = 0; b < dim; ++b) acc[row + table[b]] += c * in[row + b];
        }
      }
    }
    return out;
  }

 private:
  int n_;
  int d_;
  std::vector<std::vector<std::size_t>> tables_;
  std::vector<young::Partition> classes_;
  std::vector<young::Partition> shapes_;
  std::vector<std::vector<double>> coefficients_;
};

struct BlockOutcome {
  young::Partition shape;
  double probability = 0.0;
  PureBipartiteState post_state;
  std::vector<SpectrumLevel> block_spectrum;
};

struct BlockMeasurement {
  std::vector<BlockOutcome> outcomes;
  /// Total probability of the k_A != k_B events.
  double mismatch_probability = 0.0;
};

/// Two-sided Young-frame measurement {P_lambda (x) P_mu}. Reports every
/// matched outcome with probability above 1e-14 together with the mass that
/// fell on mismatched pairs.
inline BlockMeasurement measure_blocks(const PureBipartiteState& state) {
  const IsotypicProjectors projectors(state.copies(), state.local_dim());
  const auto& shapes = projectors.shapes();
  BlockMeasurement result;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const PureBipartiteState a_side = projectors.apply(i, Side::A, state);
    for (std::size_t j = 0; j < shapes.size(); ++j) {
      PureBipartiteState both = projectors.apply(j, Side::B, a_side);
      const double prob = both.norm_squared();
      if (i != j) {
        result.mismatch_probability += prob;
        continue;
      }
      if (prob <= 1e-14) continue;
      both.normalize();
      auto spectrum = schmidt_spectrum(both);
      result.outcomes.push_back({shapes[i], prob, std::move(both), std::move(spectrum)});
    }
  }
  return result;
}

}  // namespace uec::exact
