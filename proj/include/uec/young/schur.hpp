#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "uec/errors.hpp"
#include "uec/numeric.hpp"
#include "uec/young/partition.hpp"
#include "uec/young/spectrum.hpp"

namespace uec::young {

/// Complete homogeneous symmetric polynomials h_0..h_kmax of the given
/// variables, by the recurrence h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m).
inline std::vector<double> complete_homogeneous(std::span<const double> xs, int kmax) {
  std::vector<double> h(static_cast<std::size_t>(std::max(kmax, 0)) + 1, 0.0);
  h[0] = 1.0;
  for (double x : xs)
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += x * h[k - 1];
  return h;
}

/// Schur polynomial s_lambda(p) by the Jacobi-Trudi determinant
/// det(h_{lambda_i - i + j}). Well defined for repeated eigenvalues.
/// Rows beyond the support of p give exactly zero.
inline double schur_polynomial(const Partition& lambda, const Spectrum& p) {
  const int len = lambda.length();
  if (len > p.support()) return 0.0;
  if (len == 0) return 1.0;
  const Spectrum q = p.without_zeros();
  const auto h = complete_homogeneous(q.values(), lambda[0] + len);
  Eigen::MatrixXd jt(len, len);
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) {
      const int k = lambda[static_cast<std::size_t>(i)] - i + j;
      jt(i, j) = k < 0 ? 0.0 : h[static_cast<std::size_t>(k)];
    }
  }
  return jt.determinant();
}

/// Bialternant det(p_i^{lambda_j + d - j}) / prod_{i<j}(p_i - p_j), with d the
/// spectrum dimension. Cross-check route only: throws DegenerateSpectrumError
/// when two eigenvalues coincide (gap below 1e-12).
inline double schur_polynomial_bialternant(const Partition& lambda, const Spectrum& p) {
  const int d = p.dim();
  if (lambda.length() > d) return 0.0;
  const Partition padded = Partition::padded(lambda.parts(), d);
  double vandermonde = 1.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double gap = p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(j)];
      if (std::abs(gap) < 1e-12) throw DegenerateSpectrumError("bialternant needs distinct eigenvalues");
      vandermonde *= gap;
    }
  }
  Eigen::MatrixXd alt(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      alt(i, j) = std::pow(p[static_cast<std::size_t>(i)], padded[static_cast<std::size_t>(j)] + d - 1 - j);
  return alt.determinant() / vandermonde;
}

/// Evaluates log s_lambda(p) as a sum of positive terms (branching rule over
/// interlacing partitions), so it stays accurate for weights in the thousands
/// where the determinantal forms cancel catastrophically.
///
/// Not thread-safe: keeps a lazily grown table and a memo. Use one instance per thread.
class SchurEvaluator {
 public:
  explicit SchurEvaluator(const Spectrum& p) {
    for (double x : p.values())
      if (x > 0.0) logs_.push_back(std::log(x));
    memo_.resize(logs_.size() + 1);
  }

  [[nodiscard]] int support() const { return static_cast<int>(logs_.size()); }

  /// log s_lambda(p); -inf when lambda has more rows than the support.
  double log_value(const Partition& lambda) {
    const int k = support();
    if (lambda.length() > k) return kNegInf;
    std::vector<int> rows(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < lambda.length(); ++i) rows[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
    return eval(rows, k);
  }

  double value(const Partition& lambda) { return std::exp(log_value(lambda)); }

 private:
  // log h_m(x_0, x_1) with x_0 >= x_1 > 0.
  double log_h2(int m) {
    while (static_cast<int>(log_h2_.size()) <= m) {
      const int j = static_cast<int>(log_h2_.size());
      const double lr = logs_[1] - logs_[0];
      double geometric;
      if (lr == 0.0) geometric = std::log(j + 1.0);
      else geometric = std::log(std::expm1((j + 1.0) * lr) / std::expm1(lr));
      log_h2_.push_back(j * logs_[0] + geometric);
    }
    return log_h2_[static_cast<std::size_t>(m)];
  }

  double eval(const std::vector<int>& rows, int k) {
    if (k == 0) return 0.0;
    if (k == 1) return rows[0] * logs_[0];
    if (k == 2) return rows[1] * (logs_[0] + logs_[1]) + log_h2(rows[0] - rows[1]);
    const int weight = std::accumulate(rows.begin(), rows.begin() + k, 0);
    const double lx = logs_[static_cast<std::size_t>(k - 1)];
    LogSumExp acc;
    if (k == 3) {
      const double l01 = logs_[0] + logs_[1];
      for (int m1 = rows[1]; m1 <= rows[0]; ++m1)
        for (int m2 = rows[2]; m2 <= rows[1]; ++m2)
          acc.add(m2 * l01 + log_h2(m1 - m2) + (weight - m1 - m2) * lx);
      return acc.value();
    }
    auto it = memo_[static_cast<std::size_t>(k)].find(rows);
    if (it != memo_[static_cast<std::size_t>(k)].end()) return it->second;
    std::vector<int> mu(static_cast<std::size_t>(k - 1));
    branch(rows, mu, 0, k, weight, lx, acc);
    const double result = acc.value();
    memo_[static_cast<std::size_t>(k)].emplace(rows, result);
    return result;
  }

  void branch(const std::vector<int>& rows, std::vector<int>& mu, int i, int k, int weight, double lx,
              LogSumExp& acc) {
    if (i == k - 1) {
      const int mu_weight = std::accumulate(mu.begin(), mu.end(), 0);
      acc.add(eval(mu, k - 1) + (weight - mu_weight) * lx);
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    for (int m = rows[ui + 1]; m <= rows[ui]; ++m) {
      mu[ui] = m;
      branch(rows, mu, i + 1, k, weight, lx, acc);
    }
  }

  std::vector<double> logs_;
  std::vector<double> log_h2_;
  std::vector<std::map<std::vector<int>, double>> memo_;
};

}  // namespace uec::young
