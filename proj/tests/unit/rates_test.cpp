#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles/rates_oracles.hpp"
#include "uec/rates.hpp"

namespace uec::rates {
namespace {

using young::Spectrum;

const Spectrum kQubit({0.75, 0.25});
const Spectrum kQutrit({0.5, 0.3, 0.2});

TEST(Entropy, BinaryValue) {
  EXPECT_NEAR(shannon_entropy(kQubit), 0.811278124459133, 1e-12);
  EXPECT_DOUBLE_EQ(shannon_entropy(Spectrum({1.0, 0.0})), 0.0);
  EXPECT_NEAR(shannon_entropy(Spectrum::uniform(4)), 2.0, 1e-14);
}

TEST(RelativeEntropy, ZeroOnDiagonalAndInfiniteOffSupport) {
  EXPECT_NEAR(relative_entropy(kQutrit, kQutrit), 0.0, 1e-15);
  EXPECT_TRUE(std::isinf(relative_entropy(Spectrum({0.5, 0.5}), Spectrum({1.0, 0.0}))));
  // D(q || uniform) = log2 d - H(q).
  EXPECT_NEAR(relative_entropy(kQutrit, Spectrum::uniform(3)), std::log2(3.0) - shannon_entropy(kQutrit), 1e-13);
}

TEST(Psi, ClosedFormAndDerivative) {
  EXPECT_NEAR(psi(2.0, kQubit), std::log(5.0 / 8.0), 1e-15);
  EXPECT_NEAR(psi(1.0, kQutrit), 0.0, 1e-15);
  EXPECT_THROW(psi(0.0, kQubit), InputError);
  EXPECT_THROW(psi(-1.0, kQubit), InputError);
  const double h = 1e-5;
  for (const auto& p : {kQubit, kQutrit}) {
    const double slope = (psi(1.0 + h, p) - psi(1.0 - h, p)) / (2 * h);
    EXPECT_NEAR(slope, -shannon_entropy(p) * kLn2, 1e-8);
  }
}

TEST(Psi, ConvexInS) {
  for (double s = 0.1; s < 4.0; s += 0.1) {
    const double second = psi(s + 0.01, kQutrit) - 2 * psi(s, kQutrit) + psi(s - 0.01, kQutrit);
    EXPECT_GE(second, -1e-14);
  }
}

TEST(ExponentParametric, UniformSpectrumClosedForm) {
  for (int d = 2; d <= 5; ++d) {
    const auto u = Spectrum::uniform(d);
    for (double r = 0.0; r < std::log2(d); r += 0.17) EXPECT_NEAR(exponent_parametric(r, u, Side::Low), std::log2(d) - r, 1e-9);
  }
}

TEST(ExponentParametric, MatchesDenseScan) {
  for (const auto& p : {kQubit, kQutrit}) {
    const double h = shannon_entropy(p);
    const auto pv = std::vector<double>(p.values().begin(), p.values().end());
    for (double f : {0.05, 0.3, 0.6, 0.95}) {
      EXPECT_NEAR(exponent_parametric(f * h, p, Side::Low), oracle::scanned_exponent(f * h, pv, true), 1e-6);
    }
    const double top = std::log2(static_cast<double>(p.support()));
    for (double f : {0.1, 0.5, 0.9}) {
      const double r = h + f * (top - h);
      EXPECT_NEAR(exponent_parametric(r, p, Side::High), oracle::scanned_exponent(r, pv, false), 1e-6);
    }
  }
}

TEST(ExponentParametric, EndpointsAndShape) {
  const double h = shannon_entropy(kQubit);
  EXPECT_NEAR(exponent_parametric(h, kQubit, Side::Low), 0.0, 1e-12);
  EXPECT_NEAR(exponent_parametric(h, kQubit, Side::High), 0.0, 1e-12);
  // R = 0: only the one-dimensional irreps, exponent -log2 p_1.
  EXPECT_NEAR(exponent_parametric(0.0, kQubit, Side::Low), -std::log2(0.75), 1e-12);
  double prev = exponent_parametric(0.0, kQubit, Side::Low);
  for (double r = 0.02; r < h; r += 0.02) {
    const double e = exponent_parametric(r, kQubit, Side::Low);
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(ExponentParametric, WrongSideIsRejected) {
  const double h = shannon_entropy(kQubit);
  EXPECT_THROW(exponent_parametric(h + 0.01, kQubit, Side::Low), InputError);
  EXPECT_THROW(exponent_parametric(h - 0.01, kQubit, Side::High), InputError);
  EXPECT_THROW(exponent_parametric(1.01, kQubit, Side::High), InputError);
  EXPECT_THROW(exponent_parametric(-0.1, kQubit, Side::Low), InputError);
}

TEST(ExponentPrimal, AgreesWithParametricForm) {
  for (const auto& p : {kQubit, kQutrit, Spectrum({0.4, 0.3, 0.2, 0.1})}) {
    const double h = shannon_entropy(p);
    const double top = std::log2(static_cast<double>(p.support()));
    for (double f : {0.0, 0.25, 0.5, 0.75, 0.99}) {
      const auto res = exponent_primal(f * h, p, Side::Low);
      EXPECT_NEAR(res.exponent, exponent_parametric(f * h, p, Side::Low), 2e-3);
      EXPECT_LE(entropy_nats(res.minimizer) / kLn2, f * h + 1e-9);
    }
    for (double f : {0.2, 0.6, 0.95}) {
      const double r = h + f * (top - h);
      const auto res = exponent_primal(r, p, Side::High);
      EXPECT_NEAR(res.exponent, exponent_parametric(r, p, Side::High), 2e-3);
      EXPECT_GE(entropy_nats(res.minimizer) / kLn2, r - 1e-9);
    }
  }
}

TEST(ExponentPrimal, GuardsLargeDimension) {
  EXPECT_THROW(exponent_primal(0.5, Spectrum::uniform(5), Side::Low), GuardError);
}

TEST(BhExponent, DominatesParametricBelowEntropy) {
  const double h = shannon_entropy(kQubit);
  for (double r = h - 0.1; r < h; r += 0.005)
    EXPECT_GE(bh_exponent(r, kQubit), exponent_parametric(r, kQubit, Side::Low) - 1e-12);
  EXPECT_THROW(bh_exponent(h + 0.1, kQubit), InputError);
}

TEST(Tail, SmallCaseByHand) {
  // n = 3: dims 1 and 2; 2^{0.6} < 2 keeps only (3,0).
  const auto t = tail_probability(3, 2, kQubit, 0.2, Side::Low);
  EXPECT_NEAR(t.probability, 0.625, 1e-12);
  EXPECT_NEAR(tail_probability(3, 2, kQubit, 1.0, Side::Low).probability, 1.0, 1e-12);
}

TEST(Tail, MatchesTableauOracle) {
  for (const auto& p : {kQubit, kQutrit}) {
    const auto pv = std::vector<double>(p.values().begin(), p.values().end());
    const int d = p.dim();
    for (int n : {4, 6, 8}) {
      for (double r : {0.3, 0.7, 1.1}) {
        for (Side side : {Side::Low, Side::High}) {
          const double want = oracle::tableau_tail(n, d, pv, r, side == Side::Low);
          EXPECT_NEAR(tail_probability(n, d, p, r, side).probability, want, 1e-12);
        }
      }
    }
  }
}

TEST(Tail, ExponentEstimateApproachesParametric) {
  const double e = exponent_parametric(0.5, kQubit, Side::Low);
  const auto t = tail_probability(5000, 2, kQubit, 0.5, Side::Low);
  EXPECT_NEAR(t.exponent_estimate, e, 0.01);
  EXPECT_GT(t.probability, 0.0);
}

TEST(Tail, Guards) {
  EXPECT_THROW(tail_probability(10001, 2, kQubit, 0.5, Side::Low), GuardError);
  EXPECT_THROW(tail_probability(501, 3, kQutrit, 0.5, Side::Low), GuardError);
  EXPECT_THROW(tail_probability(5, 1, kQubit, 0.5, Side::Low), InputError);
}

TEST(Stirling, DeltaValues) {
  EXPECT_NEAR(stirling_delta(1), 1.0, 1e-15);
  EXPECT_NEAR(stirling_delta(1e6), 0.5 * std::log(2 * M_PI), 1e-6);
  for (int n = 1; n < 200; ++n) EXPECT_GT(stirling_delta(n), stirling_delta(n + 1));
  EXPECT_NEAR(stirling_delta_sup(), 1.0, 1e-15);
}

TEST(Lemma3, BoundHoldsWithPositiveSlack) {
  for (int d = 1; d <= 4; ++d) {
    const auto rep = lemma3_check(d <= 3 ? 60 : 40, d);
    EXPECT_TRUE(rep.holds) << "d=" << d;
    EXPECT_GT(rep.worst_slack, 0.0);
    EXPECT_DOUBLE_EQ(rep.constant, d * 1.0);
    EXPECT_EQ(rep.max_lhs.size(), static_cast<std::size_t>(rep.n_max));
  }
  EXPECT_THROW(lemma3_check(61, 3), GuardError);
  EXPECT_THROW(lemma3_check(41, 4), GuardError);
}

TEST(Lemma3, MaxDeviationDecaysLikeLogOverN) {
  // Least-squares slope of log(max lhs) against log n on n = 10..60.
  const auto rep = lemma3_check(60, 3);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int n = 10; n <= 60; ++n) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(rep.max_lhs[static_cast<std::size_t>(n - 1)]);
    sx += x, sy += y, sxx += x * x, sxy += x * y, ++m;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  EXPECT_LT(slope, -0.5);
  EXPECT_GT(slope, -1.0);
}

TEST(RateCurve, GridAndZeroAtEntropy) {
  const double h = shannon_entropy(kQubit);
  const auto curve = rate_curve(kQubit, {.rate_min = 0.0, .rate_max = 2 * h, .steps = 21});
  ASSERT_EQ(curve.points.size(), 21u);
  for (std::size_t i = 1; i < curve.points.size(); ++i) EXPECT_GT(curve.points[i].rate, curve.points[i - 1].rate);
  for (const auto& pt : curve.points) EXPECT_GE(pt.parametric, 0.0);
  EXPECT_NEAR(curve.points[10].parametric, 0.0, 1e-12);
  EXPECT_TRUE(std::isinf(curve.points.back().parametric));
  EXPECT_THROW(rate_curve(kQubit, {.rate_min = 0.5, .rate_max = 0.5, .steps = 3}), InputError);
}

}  // namespace
}  // namespace uec::rates
