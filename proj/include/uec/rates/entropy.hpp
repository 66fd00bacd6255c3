#pragma once

#include <cmath>
#include <limits>

#include "uec/errors.hpp"
#include "uec/numeric.hpp"
#include "uec/young/spectrum.hpp"

namespace uec::rates {

using young::Spectrum;

/// -sum q_i ln q_i with 0 ln 0 = 0.
inline double entropy_nats(std::span<const double> q) {
  double h = 0.0;
  for (double x : q)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

/// Shannon entropy in bits.
inline double shannon_entropy(const Spectrum& q) { return entropy_nats(q.values()) / kLn2; }

/// sum q_i ln(q_i / p_i); +inf when q charges a zero of p. Both vectors are
/// compared entry by entry in their canonical (descending) order.
inline double relative_entropy_nats(std::span<const double> q, std::span<const double> p) {
  if (q.size() != p.size()) throw InputError("relative entropy needs equal dimensions");
  double d = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    if (p[i] <= 0.0) return std::numeric_limits<double>::infinity();
    d += q[i] * std::log(q[i] / p[i]);
  }
  return std::max(d, 0.0);
}

/// D(q || p) in bits. A shorter spectrum is padded with zeros.
inline double relative_entropy(const Spectrum& q, const Spectrum& p) {
  const int d = std::max(q.dim(), p.dim());
  const Spectrum qp = q.padded(d), pp = p.padded(d);
  return relative_entropy_nats(qp.values(), pp.values()) / kLn2;
}

/// psi(s) = ln sum_i p_i^s (natural log), for s > 0.
inline double psi(double s, const Spectrum& p) {
  if (!(s > 0.0)) throw InputError("psi requires s > 0");
  const double lead = std::log(p[0]);
  double acc = 0.0;
  for (double x : p.values())
    if (x > 0.0) acc += std::exp(s * (std::log(x) - lead));
  return s * lead + std::log(acc);
}

/// alpha * psi(1/alpha) for alpha in (0, 1], with the alpha -> 0 limit ln p_1.
inline double scaled_psi(double alpha, const Spectrum& p) {
  const double lead = std::log(p[0]);
  if (alpha <= 0.0) return lead;
  double acc = 0.0;
  for (double x : p.values())
    if (x > 0.0) acc += std::exp((std::log(x) - lead) / alpha);
  return lead + alpha * std::log(acc);
}

}  // namespace uec::rates
