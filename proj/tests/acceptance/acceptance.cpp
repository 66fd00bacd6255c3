// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "oracles/young_oracles.hpp"
#include "uec/exact.hpp"
#include "uec/proto.hpp"
#include "uec/rates.hpp"
#include "uec/young.hpp"

namespace {

using namespace uec;
using young::Partition;
using young::Spectrum;

struct Verdict {
  bool pass = true;
  std::string detail;
};

void fail_if(Verdict& v, bool bad, const std::string& why) {
  if (bad && v.pass) {
    v.pass = false;
    v.detail = why;
  }
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Spectrum random_spectrum(int d, std::mt19937_64& rng) {
  std::vector<double> w(static_cast<std::size_t>(d));
  for (auto& x : w) x = 0.02 + young::uniform_unit(rng);
  return Spectrum::normalized(w);
}

/// dim V * s_lambda(p) from hook lengths and tableau sums.
double oracle_probability(const Partition& lambda, const Spectrum& p) {
  const std::vector<double> x(p.values().begin(), p.values().end());
  return oracle::hook_length_dim(lambda).convert_to<double>() * oracle::ssyt_schur(lambda, x);
}

Verdict exact_vs_closed_form() {
  Verdict v;
  std::mt19937_64 rng(1001);
  double worst = 0.0, worst_mismatch = 0.0;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const Spectrum p = random_spectrum(d, rng);
        const auto m = exact::measure_blocks(exact::build_input_state(p, n));
        double seen = 0.0;
        for (const auto& o : m.outcomes) {
          worst = std::max(worst, std::abs(o.probability - oracle_probability(o.shape, p)));
          seen += o.probability;
        }
        // Outcomes below the report threshold must carry no closed-form mass.
        double expected = 0.0;
        for (const auto& lambda : young::enumerate_partitions(n, d)) expected += oracle_probability(lambda, p);
        worst = std::max(worst, std::abs(seen + m.mismatch_probability - expected));
        worst_mismatch = std::max(worst_mismatch, m.mismatch_probability);
      }
    }
  }
  fail_if(v, worst > 1e-10, fmt("max |P_exact - P_closed| = %.3g", worst));
  fail_if(v, worst_mismatch > 1e-12, fmt("mismatch probability %.3g", worst_mismatch));
  if (v.pass) v.detail = fmt("max delta %.2e, max mismatch %.2e over 150 runs", worst, worst_mismatch);
  return v;
}

Verdict bell_certification() {
  Verdict v;
  std::mt19937_64 rng(2002);
  double worst = 0.0;
  int outcomes = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Spectrum> spectra{Spectrum({0.75, 0.25})};
    for (int t = 0; t < 3; ++t) spectra.push_back(random_spectrum(2, rng));
    for (const auto& p : spectra) {
      for (const auto& o : exact::concentrate(exact::build_input_state(p, n))) {
        worst = std::max(worst, 1.0 - o.fidelity);
        fail_if(v, o.bell_size != young::dim_sn_irrep(o.shape, 2), "Bell size differs from dim V");
        ++outcomes;
      }
    }
  }
  fail_if(v, worst > 1e-10, fmt("worst 1 - fidelity %.3g", worst));
  bool found = false;
  for (const auto& o : exact::concentrate(exact::build_input_state(Spectrum({0.75, 0.25}), 3))) {
    if (o.shape != Partition({2, 1})) continue;
    found = true;
    fail_if(v, std::abs(o.probability - 0.375) > 1e-10, fmt("P(2,1) = %.12f", o.probability));
    fail_if(v, o.bell_size != 2, "(2,1) does not yield one ebit");
  }
  fail_if(v, !found, "outcome (2,1) missing");
  if (v.pass) v.detail = fmt("%g outcomes, worst 1 - F = %.2e; P(2,1) = 0.375, 1 ebit", outcomes, worst);
  return v;
}

Verdict dimension_identities() {
  Verdict v;
  long shapes = 0;
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 20; ++n) {
      BigInt sum = 0, power = 1;
      for (int k = 0; k < n; ++k) power *= d;
      for (const auto& lambda : young::enumerate_partitions(n, d)) {
        const BigInt dv = young::dim_sn_irrep(lambda, d);
        sum += young::dim_su_irrep(lambda, d) * dv;
        if (n <= 12) {
          ++shapes;
          const auto trimmed = Partition(std::vector<int>(lambda.parts().begin(), lambda.parts().begin() + std::max(lambda.length(), 1)));
          fail_if(v, dv != oracle::hook_length_dim(trimmed), "factorial formula differs from hook lengths at " + lambda.to_string());
          fail_if(v, dv != young::dim_sn_irrep_signed(lambda, d), "signed formula differs at " + lambda.to_string());
        }
      }
      fail_if(v, sum != power, "sum dimU dimV != d^n at d=" + std::to_string(d) + " n=" + std::to_string(n));
    }
  }
  if (v.pass) v.detail = "sum = d^n for n <= 20, d <= 4; three dim V formulas agree on " + std::to_string(shapes) + " shapes";
  return v;
}

Verdict rsk_equivalence() {
  Verdict v;
  const Spectrum p({0.75, 0.25});
  const int n = 6;
  const long shots = 1'000'000;
  std::mt19937_64 rng(4004);
  std::map<Partition, long> counts;
  for (long s = 0; s < shots; ++s) ++counts[young::sample_shape(p, n, rng)];
  double chi2 = 0.0, worst_z = 0.0;
  int bins = 0;
  for (const auto& lambda : young::enumerate_partitions(n, 2)) {
    const double q = oracle_probability(lambda, p);
    const double c = static_cast<double>(counts[lambda]);
    const double sigma = std::sqrt(shots * q * (1 - q));
    worst_z = std::max(worst_z, std::abs(c - shots * q) / sigma);
    chi2 += (c - shots * q) * (c - shots * q) / (shots * q);
    ++bins;
  }
  const double pval = boost::math::gamma_q((bins - 1) / 2.0, chi2 / 2.0);
  fail_if(v, worst_z > 4.0, fmt("shape frequency off by %.2f sigma", worst_z));
  fail_if(v, pval <= 0.001, fmt("chi-square p-value %.3g", pval));
  if (v.pass) v.detail = fmt("max |z| = %.2f, chi2 = %.2f, p = %.3f", worst_z, chi2, pval);
  return v;
}

Verdict rate_convergence() {
  Verdict v;
  const Spectrum p({0.75, 0.25});
  const double h = rates::shannon_entropy(p);
  std::vector<double> gaps;
  for (int n : {100, 300, 1000, 3000}) {
    const auto y = proto::concentration_yield(n, 2, p);
    gaps.push_back(h - y.mean_ebits_per_copy);
  }
  for (std::size_t i = 1; i < gaps.size(); ++i) fail_if(v, gaps[i] >= gaps[i - 1], "gap does not shrink");
  fail_if(v, std::abs(gaps[2]) > 0.02, fmt("gap at n = 1000 is %.4f", gaps[2]));
  if (v.pass) v.detail = fmt("gaps %.4f, %.4f, %.4f", gaps[0], gaps[1], gaps[2]) + fmt(", %.4f bits", gaps[3]);
  return v;
}

Verdict exponent_forms() {
  Verdict v;
  double worst = 0.0;
  for (const auto& p : {Spectrum({0.75, 0.25}), Spectrum({0.5, 0.3, 0.2})}) {
    const double h = rates::shannon_entropy(p);
    const double top = std::log2(static_cast<double>(p.dim()));
    for (int i = 0; i <= 20; ++i) {
      const double r = h * i / 20.0;
      worst = std::max(worst, std::abs(rates::exponent_parametric(r, p, rates::Side::Low) -
                                       rates::exponent_primal(r, p, rates::Side::Low).exponent));
      const double s = h + (top - h) * i / 20.0;
      worst = std::max(worst, std::abs(rates::exponent_parametric(s, p, rates::Side::High) -
                                       rates::exponent_primal(s, p, rates::Side::High).exponent));
    }
  }
  fail_if(v, worst > 2e-3, fmt("parametric vs primal differ by %.3g bits", worst));
  double uniform_err = 0.0;
  for (int d = 2; d <= 4; ++d) {
    const auto u = Spectrum::uniform(d);
    for (int i = 0; i <= 20; ++i) {
      const double r = std::log2(d) * i / 20.0;
      uniform_err = std::max(uniform_err, std::abs(rates::exponent_parametric(r, u, rates::Side::Low) - (std::log2(d) - r)));
    }
  }
  fail_if(v, uniform_err > 1e-6, fmt("uniform closed form off by %.3g", uniform_err));
  const Spectrum q({0.75, 0.25});
  const double tail = rates::tail_probability(5000, 2, q, 0.5, rates::Side::Low).exponent_estimate;
  const double par = rates::exponent_parametric(0.5, q, rates::Side::Low);
  fail_if(v, std::abs(tail - par) > 0.01, fmt("tail estimate %.5f vs parametric %.5f", tail, par));
  if (v.pass)
    v.detail = fmt("duality gap %.1e, uniform error %.1e, ", worst, uniform_err) +
               fmt("n = 5000 tail %.5f vs %.5f", tail, par);
  return v;
}

Verdict lemma3_bound() {
  Verdict v;
  std::string slacks;
  for (int d = 1; d <= 4; ++d) {
    const auto rep = rates::lemma3_check(40, d);
    fail_if(v, !(rep.worst_slack > 0.0), "non-positive slack at d = " + std::to_string(d));
    fail_if(v, rep.constant != d * rates::stirling_delta(1), "C differs from d * delta_1");
    slacks += fmt(" d=%g:%.3f", d, rep.worst_slack);
  }
  if (v.pass) v.detail = "minimum slack" + slacks;
  return v;
}

Verdict bh_dominance() {
  Verdict v;
  const Spectrum p({0.75, 0.25});
  const double h = rates::shannon_entropy(p);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    const double r = h - 0.1 + 0.1 * i / 200.0;
    worst = std::min(worst, rates::bh_exponent(r, p) - rates::exponent_parametric(r, p, rates::Side::Low));
  }
  fail_if(v, worst < 0.0, fmt("bh below parametric by %.3g", -worst));
  if (v.pass) v.detail = fmt("min (bh - parametric) = %.3e on 200 rates", worst);
  return v;
}

Verdict protocol_chains() {
  Verdict v;
  const auto outcomes = exact::concentrate(exact::build_input_state(Spectrum({0.75, 0.25}), 3));
  const exact::ConcentrationOutcome* one_ebit = nullptr;
  for (const auto& o : outcomes)
    if (o.bell_size == 2) one_ebit = &o;
  if (!one_ebit) {
    fail_if(v, true, "no 1-ebit outcome");
    return v;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(one_ebit->v_state);
  const Eigen::VectorXcd top = es.eigenvectors().col(es.eigenvalues().size() - 1);
  Eigen::MatrixXcd resource(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) resource(a, b) = top(a * 2 + b);
  std::mt19937_64 rng(9009);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXcd psi(2);
    for (int i = 0; i < 2; ++i) psi(i) = {young::uniform_unit(rng) - 0.5, young::uniform_unit(rng) - 0.5};
    psi.normalize();
    for (const auto& br : proto::teleport_branches(psi, resource)) worst = std::max(worst, 1.0 - br.fidelity);
  }
  fail_if(v, worst > 1e-10, fmt("teleport fidelity deficit %.3g", worst));
  fail_if(v, proto::teleport_resources(one_ebit->bell_size).classical_bits != 2.0, "classical cost is not 2 bits");

  for (int D : {2, 3, 4}) {
    const auto res = proto::bell_resource(D);
    fail_if(v, proto::dense_coding_error(res) > 1e-12, "dense coding error at D = " + std::to_string(D));
    for (int m = 0; m < D * D; ++m)
      fail_if(v, proto::simulate_dense_coding(res, m, rng) != m, "message decoded wrongly at D = " + std::to_string(D));
  }
  // Code sizes from Young-frame outcomes: shapes with dim V = 2, 3, 4.
  for (const auto& shape : {Partition({2, 1}), Partition({3, 1}), Partition({3, 1, 0})}) {
    const auto code = proto::dense_code_params(shape);
    const BigInt dv = young::dim_sn_irrep(shape, shape.rows());
    fail_if(v, code.N != dv || code.M != dv * dv, "code size mismatch at " + shape.to_string());
  }
  if (v.pass) v.detail = fmt("teleport deficit %.1e with 2 bits; D = 2,3,4 decode all messages", worst);
  return v;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"exact block probabilities vs closed form", 120, exact_vs_closed_form},
      {"perfect Bell certification", 60, bell_certification},
      {"dimension identities", 30, dimension_identities},
      {"RSK sampling matches the distribution", 30, rsk_equivalence},
      {"mean yield approaches the entropy", 60, rate_convergence},
      {"parametric and primal exponents", 120, exponent_forms},
      {"log-dimension entropy bound", 30, lemma3_bound},
      {"random-coding exponent dominance", 10, bh_dominance},
      {"teleportation and dense-coding chains", 10, protocol_chains},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && secs > c.budget_seconds) {
      v.pass = false;
      v.detail += fmt(" (over the %.0f s budget)", c.budget_seconds);
    }
    failed += !v.pass;
    std::printf("[%s] %zu. %s (%.2f s): %s\n", v.pass ? "PASS" : "FAIL", i + 1, c.name, secs, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
