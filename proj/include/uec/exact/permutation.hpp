#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "uec/errors.hpp"
#include "uec/exact/state.hpp"
#include "uec/young/partition.hpp"

namespace uec::exact {

/// Permutation of {0..n-1}, stored as the image of each point.
class Permutation {
 public:
  explicit Permutation(int n) : image_(static_cast<std::size_t>(n)) {
    std::iota(image_.begin(), image_.end(), 0);
  }
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<int> sorted = image_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) throw InputError("not a permutation");
  }

  [[nodiscard]] int size() const { return static_cast<int>(image_.size()); }
  [[nodiscard]] int operator()(int k) const { return image_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] const std::vector<int>& image() const { return image_; }

  /// (this * other)(k) = this(other(k)).
  [[nodiscard]] Permutation compose(const Permutation& other) const {
    std::vector<int> img(image_.size());
    for (std::size_t k = 0; k < img.size(); ++k) img[k] = image_[static_cast<std::size_t>(other.image_[k])];
    return Permutation(std::move(img));
  }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> img(image_.size());
    for (std::size_t k = 0; k < img.size(); ++k) img[static_cast<std::size_t>(image_[k])] = static_cast<int>(k);
    return Permutation(std::move(img));
  }

  /// Cycle lengths sorted descending, as a partition of n.
  [[nodiscard]] young::Partition cycle_type() const {
    std::vector<bool> seen(image_.size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < image_.size(); ++start) {
      if (seen[start]) continue;
      int len = 0;
      for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(image_[k])) {
        seen[k] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return young::Partition(std::move(lengths));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// Index map of pi(sigma) on (C^d)^{(x)n}: the factor in slot k moves to slot sigma(k).
inline std::vector<std::size_t> permutation_table(const Permutation& sigma, int d) {
  const int n = sigma.size();
  const std::size_t dim = static_cast<std::size_t>(local_dimension(d, n));
  std::vector<std::size_t> weight(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) weight[static_cast<std::size_t>(k)] = static_cast<std::size_t>(local_dimension(d, n - 1 - k));
  std::vector<std::size_t> table(dim);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < dim; ++a) {
    std::size_t rest = a;
    for (int k = n - 1; k >= 0; --k) {
      digits[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    std::size_t target = 0;
    for (int k = 0; k < n; ++k)
      target += static_cast<std::size_t>(digits[static_cast<std::size_t>(k)]) * weight[static_cast<std::size_t>(sigma(k))];
    table[a] = target;
  }
  return table;
}

enum class Side { A, B };

/// Applies pi(sigma) to the tensor factors of one side.
inline PureBipartiteState permutation_action(const Permutation& sigma, Side side, const PureBipartiteState& state) {
  if (sigma.size() != state.copies()) throw InputError("permutation size does not match the number of copies");
  const auto table = permutation_table(sigma, state.local_dim());
  PureBipartiteState out(state.copies(), state.local_dim());
  const std::size_t dim = state.side_dim();
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (side == Side::A) out.at(table[a], b) = state.at(a, b);
      else out.at(a, table[b]) = state.at(a, b);
    }
  return out;
}

}  // namespace uec::exact
