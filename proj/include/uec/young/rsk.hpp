#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "uec/errors.hpp"
#include "uec/young/partition.hpp"
#include "uec/young/spectrum.hpp"

namespace uec::young {

/// Shape of the Robinson-Schensted row-insertion tableau of a word over
/// the alphabet 1..d, padded to d rows.
inline Partition rsk_shape(std::span<const int> word, int d) {
  if (word.empty()) throw InputError("RSK needs a nonempty word");
  if (d < 1) throw InputError("alphabet size must be positive");
  std::vector<std::vector<int>> rows;
  for (int letter : word) {
    if (letter < 1 || letter > d) throw InputError("word letter outside 1..d");
    int x = letter;
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  std::vector<int> parts(static_cast<std::size_t>(d), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) parts[r] = static_cast<int>(rows[r].size());
  return Partition(std::move(parts));
}

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit engine, so
/// results do not depend on the standard library's distribution classes.
template <class Engine>
double uniform_unit(Engine& rng) {
  static_assert(Engine::max() - Engine::min() == UINT64_MAX, "needs a 64-bit engine");
  return static_cast<double>((rng() - Engine::min()) >> 11) * 0x1.0p-53;
}

/// Inverse-CDF sampler over the letters 1..d of a spectrum.
class LetterSampler {
 public:
  explicit LetterSampler(const Spectrum& p) {
    double acc = 0.0;
    for (int i = 0; i < p.dim(); ++i) {
      acc += p[static_cast<std::size_t>(i)];
      cumulative_.push_back(acc);
      if (p[static_cast<std::size_t>(i)] > 0.0) last_nonzero_ = i + 1;
    }
  }

  template <class Engine>
  int operator()(Engine& rng) const {
    const double u = uniform_unit(rng);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) return last_nonzero_;
    return static_cast<int>(it - cumulative_.begin()) + 1;
  }

 private:
  std::vector<double> cumulative_;
  int last_nonzero_ = 1;
};

/// Draws an i.i.d. word of length n from p and returns its RSK shape; the
/// shape is distributed as the Young-frame measurement outcome.
template <class Engine>
Partition sample_shape(const Spectrum& p, int n, Engine& rng) {
  if (n < 1) throw InputError("sample_shape needs n >= 1");
  const LetterSampler letters(p);
  std::vector<int> word(static_cast<std::size_t>(n));
  for (auto& w : word) w = letters(rng);
  return rsk_shape(word, p.dim());
}

}  // namespace uec::young
