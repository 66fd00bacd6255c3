#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace uec {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kLn2 = 0.69314718055994530941723212145817656807550013436;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Pairwise summation; error grows as O(log n) instead of O(n).
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

/// Streaming log-sum-exp accumulator.
class LogSumExp {
 public:
  void add(double log_term) {
    if (log_term == kNegInf) return;
    if (log_term > max_) {
      sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    } else {
      sum_ += std::exp(log_term - max_);
    }
  }
  [[nodiscard]] double value() const {
    return sum_ == 0.0 ? kNegInf : max_ + std::log(sum_);
  }

 private:
  double max_ = kNegInf;
  double sum_ = 0.0;
};

/// Natural log of a positive big integer, accurate for values far beyond
/// the double range. Returns -inf for zero.
inline double log_big(const BigInt& x) {
  if (x <= 0) return kNegInf;
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 62) return std::log(static_cast<double>(x.convert_to<std::uint64_t>()));
  const std::size_t shift = bits - 62;
  const BigInt top = x >> shift;
  return std::log(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift) * kLn2;
}

inline double log2_big(const BigInt& x) { return log_big(x) / kLn2; }

/// Exponents of each prime in n!, by Legendre's formula.
inline void add_factorial_exponents(std::vector<int>& exps, const std::vector<int>& primes,
                                    int n, int sign) {
  for (std::size_t k = 0; k < primes.size() && primes[k] <= n; ++k) {
    long long p = primes[k];
    int e = 0;
    for (long long q = p; q <= n; q *= p) e += static_cast<int>(n / q);
    exps[k] += sign * e;
  }
}

inline std::vector<int> primes_up_to(int n) {
  std::vector<int> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (int i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (long long j = static_cast<long long>(i) * i; j <= n; j += i)
      composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

}  // namespace uec
