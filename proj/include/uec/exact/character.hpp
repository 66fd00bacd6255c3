#pragma once

#include <algorithm>
#include <vector>

#include "uec/errors.hpp"
#include "uec/young/partition.hpp"

namespace uec::exact {

namespace detail {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves one
// bead from position b to b - r; the height is the number of beads jumped.
inline long long mn_rec(std::vector<int> beta, const std::vector<int>& cycles, std::size_t next) {
  if (next == cycles.size()) return 1;
  const int r = cycles[next];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int other : beta)
      if (other > target && other < b) ++jumped;
    std::vector<int> moved = beta;
    moved[i] = target;
    const long long sub = mn_rec(std::move(moved), cycles, next + 1);
    total += (jumped % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace detail

/// Irreducible character chi^lambda at the class with the given cycle type.
inline long long sn_character(const young::Partition& lambda, const young::Partition& cycle_type) {
  if (lambda.weight() != cycle_type.weight()) throw InputError("character arguments must have equal weight");
  std::vector<int> beta;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) beta.push_back(lambda[static_cast<std::size_t>(i)] + len - 1 - i);
  std::vector<int> cycles;
  for (int c : cycle_type.parts())
    if (c > 0) cycles.push_back(c);
  return detail::mn_rec(std::move(beta), cycles, 0);
}

}  // namespace uec::exact
