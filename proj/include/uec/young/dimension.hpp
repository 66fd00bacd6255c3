#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "uec/errors.hpp"
#include "uec/numeric.hpp"
#include "uec/young/partition.hpp"

namespace uec::young {

/// The staircase (d-1, d-2, ..., 0).
inline std::vector<int> staircase(int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = d - 1 - i;
  return v;
}

namespace detail {

inline Partition with_rows(const Partition& lambda, int d) {
  if (d < 1) throw InputError("local dimension must be positive");
  if (lambda.rows() == d) return lambda;
  return Partition::padded(lambda.parts(), d);
}

/// Shifted parts l_i = lambda_i + d - 1 - i (strictly decreasing).
inline std::vector<int> shifted(const Partition& lambda) {
  const int d = lambda.rows();
  std::vector<int> l(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) l[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + d - 1 - i;
  return l;
}

inline void add_integer_exponents(std::vector<int>& exps, const std::vector<int>& primes, int value) {
  for (std::size_t k = 0; k < primes.size() && value > 1; ++k) {
    const int p = primes[k];
    if (static_cast<long long>(p) * p > value) break;
    while (value % p == 0) {
      ++exps[k];
      value /= p;
    }
  }
  if (value > 1) {
    auto it = std::lower_bound(primes.begin(), primes.end(), value);
    exps[static_cast<std::size_t>(it - primes.begin())] += 1;
  }
}

inline BigInt multiply_out(const std::vector<int>& exps, const std::vector<int>& primes) {
  BigInt result = 1;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (exps[k] < 0) throw Error("internal: non-integral dimension");
    if (exps[k] > 0) result *= boost::multiprecision::pow(BigInt(primes[k]), static_cast<unsigned>(exps[k]));
  }
  return result;
}

/// n! prod_{i<j} (l_i - l_j) / prod_i l_i!, evaluated exactly in prime-factored form.
inline BigInt dim_sn_factored(const Partition& lambda, const std::vector<int>& primes) {
  const auto l = shifted(lambda);
  std::vector<int> exps(primes.size(), 0);
  add_factorial_exponents(exps, primes, lambda.weight(), +1);
  for (int li : l) add_factorial_exponents(exps, primes, li, -1);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) add_integer_exponents(exps, primes, l[i] - l[j]);
  return multiply_out(exps, primes);
}

}  // namespace detail

/// Dimension of the symmetric-group irrep V_lambda from the factorial formula
///   n! / prod_i (n_i + d - i)!  *  prod_{i<j} (n_i - n_j - i + j).
/// Any d >= number of nonzero rows gives the same value.
inline BigInt dim_sn_irrep(const Partition& lambda, int d) {
  const Partition padded = detail::with_rows(lambda, d);
  const auto primes = primes_up_to(padded.weight() + d);
  return detail::dim_sn_factored(padded, primes);
}

/// Same dimension as an alternating sum of multinomials,
///   sum_{g in S_d} sgn(g) C(n + delta - g delta),
/// with C(m) = n! / prod m_i! when every m_i >= 0 and 0 otherwise.
inline BigInt dim_sn_irrep_signed(const Partition& lambda, int d) {
  if (d > 8) throw GuardError("signed multinomial formula limited to d <= 8 (d! terms)");
  const Partition padded = detail::with_rows(lambda, d);
  const int n = padded.weight();
  const auto delta = staircase(d);

  std::vector<BigInt> factorial(static_cast<std::size_t>(n) + 1, 1);
  for (int k = 1; k <= n; ++k) factorial[static_cast<std::size_t>(k)] = factorial[static_cast<std::size_t>(k - 1)] * k;

  std::vector<int> g(static_cast<std::size_t>(d));
  std::iota(g.begin(), g.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (g[static_cast<std::size_t>(i)] > g[static_cast<std::size_t>(j)]) ++inversions;
    BigInt term = factorial[static_cast<std::size_t>(n)];
    bool vanishes = false;
    for (int i = 0; i < d && !vanishes; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const int m = padded[ui] + delta[ui] - delta[static_cast<std::size_t>(g[ui])];
      if (m < 0 || m > n) vanishes = true;
      else term /= factorial[static_cast<std::size_t>(m)];
    }
    if (vanishes) continue;
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(g.begin(), g.end()));
  return total;
}

/// Dimension of the unitary-group irrep U_lambda (Weyl dimension formula).
inline BigInt dim_su_irrep(const Partition& lambda, int d) {
  const Partition padded = detail::with_rows(lambda, d);
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= padded[static_cast<std::size_t>(i)] - padded[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

/// Natural log of dim V_lambda through log-gamma; for large n where exact
/// integers are not needed.
inline double log_dim_sn_irrep(const Partition& lambda, int d) {
  const Partition padded = detail::with_rows(lambda, d);
  const auto l = detail::shifted(padded);
  double acc = std::lgamma(padded.weight() + 1.0);
  for (std::size_t i = 0; i < l.size(); ++i) {
    acc -= std::lgamma(l[i] + 1.0);
    for (std::size_t j = i + 1; j < l.size(); ++j) acc += std::log(static_cast<double>(l[i] - l[j]));
  }
  return acc;
}

}  // namespace uec::young
