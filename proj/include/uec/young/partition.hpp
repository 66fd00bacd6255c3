#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "uec/errors.hpp"

namespace uec::young {

/// Young diagram with a fixed number of rows d (trailing zeros explicit).
class Partition {
 public:
  Partition() = default;

  /// Takes the rows as given; they must be weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw InputError("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InputError("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// Pads (or validates trailing zeros) to exactly d rows.
  static Partition padded(std::vector<int> parts, int d) {
    while (parts.size() > static_cast<std::size_t>(d) && !parts.empty() && parts.back() == 0)
      parts.pop_back();
    if (parts.size() > static_cast<std::size_t>(d))
      throw InputError("partition has more than d nonzero rows");
    parts.resize(static_cast<std::size_t>(d), 0);
    return Partition(std::move(parts));
  }

  [[nodiscard]] int weight() const { return weight_; }
  [[nodiscard]] int rows() const { return static_cast<int>(parts_.size()); }
  /// Number of nonzero rows.
  [[nodiscard]] int length() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
  }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

  [[nodiscard]] std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

namespace detail {

inline void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, int d,
                          std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == d) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  const int rows_left = d - static_cast<int>(cur.size());
  // Largest part first gives descending lexicographic order.
  for (int part = std::min(remaining, max_part); part >= 0; --part) {
    if (static_cast<long long>(part) * rows_left < remaining) break;
    cur.push_back(part);
    enumerate_rec(remaining - part, part, cur, d, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Number of partitions of n into at most d parts, saturating at UINT64_MAX.
inline std::uint64_t count_partitions(int n, int d) {
  if (n < 0 || d < 0) return 0;
  // p(k, j): partitions of k into parts of size <= j (conjugate view).
  std::vector<std::uint64_t> table(static_cast<std::size_t>(n) + 1, 0);
  table[0] = 1;
  for (int part = 1; part <= d; ++part) {
    for (int k = part; k <= n; ++k) {
      const auto add = table[static_cast<std::size_t>(k - part)];
      auto& slot = table[static_cast<std::size_t>(k)];
      slot = (slot > UINT64_MAX - add) ? UINT64_MAX : slot + add;
    }
  }
  return table[static_cast<std::size_t>(n)];
}

/// All partitions of n with at most d rows, padded to d rows, in descending
/// lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n, int d) {
  if (n < 0) throw InputError("partition weight must be nonnegative");
  if (d < 0) throw InputError("row count must be nonnegative");
  if (d == 0) {
    if (n > 0) throw InputError("no partition of a positive weight has zero rows");
    return {Partition{}};
  }
  std::vector<Partition> out;
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(d));
  detail::enumerate_rec(n, n, cur, d, out);
  return out;
}

}  // namespace uec::young
