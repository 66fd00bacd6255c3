#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "uec/cli/config.hpp"
#include "uec/cli/format.hpp"
#include "uec/exact.hpp"
#include "uec/proto.hpp"
#include "uec/rates.hpp"
#include "uec/young.hpp"

namespace uec::cli {

/// Text to emit and the process exit code.
struct CommandOutput {
  std::string text;
  int exit_code = 0;
};

namespace detail {

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void require_json(const RunConfig& cfg) {
  if (cfg.format_or(Format::Json) != Format::Json) throw InputError(cfg.subcommand + " supports --format json only");
}

inline int require_n(const RunConfig& cfg, int lo = 1) {
  if (!cfg.has_n) throw InputError("--n is required");
  if (cfg.n < lo) throw InputError("--n must be >= " + std::to_string(lo));
  return cfg.n;
}

/// Standard normal draws by Box-Muller on the library's own uniform, so the
/// stream does not depend on the standard library implementation.
inline double gaussian(std::mt19937_64& rng) {
  const double u1 = 1.0 - young::uniform_unit(rng);
  const double u2 = young::uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace detail

inline CommandOutput cmd_dist(const RunConfig& cfg) {
  const auto p = parse_spectrum(cfg.spectrum_text, cfg.normalize);
  const int n = detail::require_n(cfg, 0);
  const int d = p.dim();
  const auto dist = young::distribution(n, d, p);
  if (cfg.format_or(Format::Json) == Format::Csv) {
    CsvWriter csv;
    csv.row({"partition", "dim_v", "dim_u", "probability", "ebits"});
    for (const auto& e : dist.entries)
      csv.row({partition_csv(e.shape, d), big_string(e.dim_v), big_string(e.dim_u), csv_num(e.probability), csv_num(e.ebits)});
    return {csv.str(), 0};
  }
  json outcomes = json::array();
  for (const auto& e : dist.entries) {
    outcomes.push_back({{"partition", partition_json(e.shape, d)},
                        {"dim_v", big_string(e.dim_v)},
                        {"dim_u", big_string(e.dim_u)},
                        {"probability", num(e.probability)},
                        {"ebits", num(e.ebits)}});
  }
  json j = {{"schema", "uec.dist.v1"}, {"n", n}, {"d", d}, {"spectrum", spectrum_json(p)}, {"outcomes", outcomes}};
  return {detail::dump(j), 0};
}

inline CommandOutput cmd_simulate(const RunConfig& cfg) {
  detail::require_json(cfg);
  const auto p = parse_spectrum(cfg.spectrum_text, cfg.normalize);
  const int n = detail::require_n(cfg);
  const int d = p.dim();
  if (cfg.certify_bell && d != 2) throw InputError("--certify-bell needs a two-entry spectrum");
  const auto state = exact::build_input_state(p, n);
  const auto measured = exact::measure_blocks(state);
  std::map<young::Partition, const exact::ConcentrationOutcome*> certified;
  std::vector<exact::ConcentrationOutcome> concentrated;
  if (cfg.certify_bell) {
    concentrated = exact::concentrate(state);
    for (const auto& c : concentrated) certified[c.shape] = &c;
  }
  young::SchurEvaluator schur(p);
  double max_delta = 0.0;
  json outcomes = json::array();
  for (const auto& o : measured.outcomes) {
    const double closed = young::schur_weyl_prob(o.shape, p);
    const double delta = std::abs(o.probability - closed);
    max_delta = std::max(max_delta, delta);
    json levels = json::array();
    for (const auto& lv : o.block_spectrum) levels.push_back({{"value", num(lv.value)}, {"multiplicity", lv.multiplicity}});
    const BigInt dim_v = young::dim_sn_irrep(o.shape, d);
    json row = {{"partition", partition_json(o.shape, d)},
                {"probability", num(o.probability)},
                {"closed_form", num(closed)},
                {"delta", num(delta)},
                {"dim_v", big_string(dim_v)},
                {"ebits", num(log2_big(dim_v))},
                {"schmidt_levels", levels}};
    if (cfg.certify_bell) {
      const auto it = certified.find(o.shape);
      row["bell_fidelity"] = it == certified.end() ? json(nullptr) : num(it->second->fidelity);
    }
    outcomes.push_back(row);
  }
  json j = {{"schema", "uec.simulate.v1"},
            {"n", n},
            {"d", d},
            {"spectrum", spectrum_json(p)},
            {"mismatch_probability", num(measured.mismatch_probability)},
            {"max_delta", num(max_delta)},
            {"outcomes", outcomes}};
  return {detail::dump(j), 0};
}

inline constexpr double kMaxSampleWork = 2e9;

inline CommandOutput cmd_sample(const RunConfig& cfg) {
  const auto p = parse_spectrum(cfg.spectrum_text, cfg.normalize);
  const int n = detail::require_n(cfg);
  const int d = p.dim();
  if (cfg.shots < 1) throw InputError("--shots must be >= 1");
  if (static_cast<double>(cfg.shots) * n > kMaxSampleWork) throw GuardError("shots * n exceeds 2e9 letters");
  const auto dist = young::distribution(n, d, p);
  std::map<young::Partition, long long> counts;
  std::mt19937_64 rng(cfg.effective_seed());
  for (long long s = 0; s < cfg.shots; ++s) ++counts[young::sample_shape(p, n, rng)];

  const double shots = static_cast<double>(cfg.shots);
  double chi2 = 0.0;
  int bins = 0;
  struct Row {
    young::Partition shape;
    long long count;
    double probability;
  };
  std::vector<Row> rows;
  for (const auto& e : dist.entries) {
    const auto it = counts.find(e.shape);
    const long long c = it == counts.end() ? 0 : it->second;
    if (e.probability > 0.0) {
      const double expect = shots * e.probability;
      chi2 += (c - expect) * (c - expect) / expect;
      ++bins;
    }
    if (c > 0) rows.push_back({e.shape, c, e.probability});
  }
  const int dof = bins - 1;
  const double p_value = dof > 0 ? boost::math::gamma_q(dof / 2.0, chi2 / 2.0) : 1.0;

  if (cfg.format_or(Format::Json) == Format::Csv) {
    CsvWriter csv;
    csv.row({"partition", "count", "frequency", "probability", "sigma"});
    for (const auto& r : rows) {
      const double sigma = std::sqrt(r.probability * (1 - r.probability) / shots);
      csv.row({partition_csv(r.shape, d), std::to_string(r.count), csv_num(r.count / shots), csv_num(r.probability), csv_num(sigma)});
    }
    return {csv.str(), 0};
  }
  json hist = json::array();
  for (const auto& r : rows) {
    hist.push_back({{"partition", partition_json(r.shape, d)},
                    {"count", r.count},
                    {"frequency", num(r.count / shots)},
                    {"probability", num(r.probability)},
                    {"sigma", num(std::sqrt(r.probability * (1 - r.probability) / shots))}});
  }
  json j = {{"schema", "uec.sample.v1"},
            {"n", n},
            {"d", d},
            {"spectrum", spectrum_json(p)},
            {"shots", cfg.shots},
            {"seed", cfg.effective_seed()},
            {"histogram", hist},
            {"chi_square", num(chi2)},
            {"dof", dof},
            {"p_value", num(p_value)}};
  return {detail::dump(j), 0};
}

namespace detail {

inline std::vector<double> rate_grid(const RunConfig& cfg, const young::Spectrum& p, bool single_ok) {
  const double top = std::log2(static_cast<double>(p.dim()));
  const double lo = cfg.rate_min.value_or(0.0);
  const double hi = cfg.rate_max.value_or(single_ok && cfg.rate_min ? lo : top);
  const int steps = cfg.steps.value_or(single_ok ? (lo == hi ? 1 : 2) : 11);
  if (!(lo >= 0.0) || !(hi <= top + 1e-12)) throw InputError("rate grid must lie inside [0, log2 d]");
  if (steps < 1 || (steps == 1 && lo != hi) || (steps > 1 && !(lo < hi)))
    throw InputError("rate grid needs rate-min < rate-max and steps >= 2");
  if (steps > 100000) throw GuardError("at most 100000 rate steps");
  std::vector<double> grid;
  for (int i = 0; i < steps; ++i) grid.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
  return grid;
}

inline const char* side_name(rates::Side s) { return s == rates::Side::Low ? "low" : "high"; }

}  // namespace detail

inline CommandOutput cmd_exponent(const RunConfig& cfg) {
  const auto p = parse_spectrum(cfg.spectrum_text, cfg.normalize);
  const auto grid = detail::rate_grid(cfg, p, false);
  rates::CurveOptions opt;
  opt.rate_min = grid.front();
  opt.rate_max = grid.back();
  opt.steps = static_cast<int>(grid.size());
  opt.tail_copies = cfg.has_n ? detail::require_n(cfg) : 0;
  const auto curve = rates::rate_curve(p, opt);
  auto opt_num = [](const std::optional<double>& v) { return v ? csv_num(*v) : std::string(); };
  if (cfg.format_or(Format::Csv) == Format::Csv) {
    CsvWriter csv;
    csv.row({"R", "parametric", "primal", "bh", "tail_estimate"});
    for (const auto& pt : curve.points)
      csv.row({csv_num(pt.rate), csv_num(pt.parametric), opt_num(pt.primal), opt_num(pt.bh), opt_num(pt.tail_estimate)});
    return {csv.str(), 0};
  }
  auto jopt = [](const std::optional<double>& v) { return v ? num(*v) : json(nullptr); };
  json points = json::array();
  for (const auto& pt : curve.points) {
    points.push_back({{"R", num(pt.rate)},
                      {"side", detail::side_name(pt.side)},
                      {"parametric", num(pt.parametric)},
                      {"primal", jopt(pt.primal)},
                      {"bh", jopt(pt.bh)},
                      {"tail_estimate", jopt(pt.tail_estimate)}});
  }
  json j = {{"schema", "uec.exponent.v1"},
            {"d", p.dim()},
            {"spectrum", spectrum_json(p)},
            {"entropy", num(rates::shannon_entropy(p))},
            {"n", cfg.has_n ? json(cfg.n) : json(nullptr)},
            {"points", points}};
  return {detail::dump(j), 0};
}

inline CommandOutput cmd_tail(const RunConfig& cfg) {
  const auto p = parse_spectrum(cfg.spectrum_text, cfg.normalize);
  const int n = detail::require_n(cfg);
  if (!cfg.rate_min) throw InputError("tail needs --rate-min (and optionally --rate-max, --steps)");
  const auto grid = detail::rate_grid(cfg, p, true);
  const double h = rates::shannon_entropy(p);
  const double top = std::log2(static_cast<double>(p.support()));
  struct Row {
    double rate;
    rates::Side side;
    rates::TailResult tail;
    double parametric;
  };
  std::vector<Row> rows;
  for (double r : grid) {
    const auto side = r < h ? rates::Side::Low : rates::Side::High;
    const double e = (side == rates::Side::High && r > top + rates::kRateSlack)
                         ? std::numeric_limits<double>::infinity()
                         : rates::exponent_parametric(r, p, side);
    rows.push_back({r, side, rates::tail_probability(n, p.dim(), p, r, side), e});
  }
  if (cfg.format_or(Format::Json) == Format::Csv) {
    CsvWriter csv;
    csv.row({"R", "side", "probability", "log2_probability", "exponent_estimate", "parametric"});
    for (const auto& r : rows)
      csv.row({csv_num(r.rate), detail::side_name(r.side), csv_num(r.tail.probability), csv_num(r.tail.log2_probability),
               csv_num(r.tail.exponent_estimate), csv_num(r.parametric)});
    return {csv.str(), 0};
  }
  json points = json::array();
  for (const auto& r : rows) {
    points.push_back({{"R", num(r.rate)},
                      {"side", detail::side_name(r.side)},
                      {"probability", num(r.tail.probability)},
                      {"log2_probability", num(r.tail.log2_probability)},
                      {"exponent_estimate", num(r.tail.exponent_estimate)},
                      {"parametric", num(r.parametric)}});
  }
  json j = {{"schema", "uec.tail.v1"}, {"n", n}, {"d", p.dim()}, {"spectrum", spectrum_json(p)}, {"points", points}};
  return {detail::dump(j), 0};
}

inline constexpr std::uint64_t kMaxCheckPartitions = 200'000;

inline CommandOutput cmd_check(const RunConfig& cfg) {
  detail::require_json(cfg);
  if (cfg.n_max < 0) throw InputError("--n-max must be nonnegative");
  json j = {{"schema", "uec.check.v1"}, {"check", cfg.check_kind}};
  bool pass = true;
  if (cfg.check_kind == "dims") {
    const int d = cfg.d;
    if (d < 1) throw InputError("check dims needs --d >= 1");
    std::uint64_t total = 0;
    for (int n = 0; n <= cfg.n_max; ++n) total += young::count_partitions(n, d);
    if (total > kMaxCheckPartitions) throw GuardError("check dims limited to 2e5 partitions in total");
    json rows = json::array();
    bool signed_ok = true;
    for (int n = 0; n <= cfg.n_max; ++n) {
      BigInt sum = 0;
      for (const auto& lambda : young::enumerate_partitions(n, d)) {
        const BigInt v = young::dim_sn_irrep(lambda, d);
        sum += young::dim_su_irrep(lambda, d) * v;
        if (d <= 8 && young::dim_sn_irrep_signed(lambda, d) != v) signed_ok = false;
      }
      BigInt expect = 1;
      for (int k = 0; k < n; ++k) expect *= d;
      const bool ok = sum == expect;
      pass = pass && ok;
      rows.push_back({{"n", n}, {"sum", big_string(sum)}, {"expected", big_string(expect)}, {"pass", ok}});
    }
    pass = pass && signed_ok;
    j["d"] = d;
    j["n_max"] = cfg.n_max;
    j["signed_formula_agrees"] = signed_ok;
    j["rows"] = rows;
  } else if (cfg.check_kind == "lemma3") {
    const auto rep = rates::lemma3_check(cfg.n_max, cfg.d);
    pass = rep.holds;
    json lhs = json::array();
    for (double v : rep.max_lhs) lhs.push_back(num(v));
    j["d"] = rep.d;
    j["n_max"] = rep.n_max;
    j["coefficient_stated"] = num(rep.coefficient_stated);
    j["coefficient_derived"] = num(rep.coefficient_derived);
    j["coefficient"] = num(rep.coefficient);
    j["constant"] = num(rep.constant);
    j["worst_slack"] = num(rep.worst_slack);
    j["worst_slack_stated"] = num(rep.worst_slack_stated);
    j["worst_n"] = rep.worst_n;
    j["worst_partition"] = partition_json(rep.worst_shape, rep.d);
    j["max_lhs"] = lhs;
  } else if (cfg.check_kind == "completeness") {
    const auto p = parse_spectrum(cfg.spectrum_text, cfg.normalize);
    if (cfg.n_max < 1) throw InputError("check completeness needs --n-max >= 1");
    json rows = json::array();
    double worst = 0.0;
    for (int n = 1; n <= cfg.n_max; ++n) {
      const double dev = std::abs(young::distribution(n, p.dim(), p).total_probability() - 1.0);
      worst = std::max(worst, dev);
      rows.push_back({{"n", n}, {"deviation", num(dev)}});
    }
    pass = worst <= 1e-9;
    j["d"] = p.dim();
    j["spectrum"] = spectrum_json(p);
    j["n_max"] = cfg.n_max;
    j["tolerance"] = 1e-9;
    j["worst_deviation"] = num(worst);
    j["rows"] = rows;
  } else {
    throw InputError("check needs one of: dims, lemma3, completeness");
  }
  j["pass"] = pass;
  return {detail::dump(j), pass ? 0 : 1};
}

inline CommandOutput cmd_yield(const RunConfig& cfg) {
  const auto p = parse_spectrum(cfg.spectrum_text, cfg.normalize);
  const int n = detail::require_n(cfg, 0);
  const auto y = proto::concentration_yield(n, p.dim(), p);
  if (cfg.format_or(Format::Json) == Format::Csv) {
    CsvWriter csv;
    csv.row({"partition", "probability", "bell_size", "ebits"});
    for (const auto& o : y.outcomes)
      csv.row({partition_csv(o.shape, y.d), csv_num(o.probability), big_string(o.bell_size), csv_num(o.ebits)});
    return {csv.str(), 0};
  }
  json outcomes = json::array();
  for (const auto& o : y.outcomes) {
    outcomes.push_back({{"partition", partition_json(o.shape, y.d)},
                        {"probability", num(o.probability)},
                        {"bell_size", big_string(o.bell_size)},
                        {"ebits", num(o.ebits)}});
  }
  json j = {{"schema", "uec.yield.v1"},
            {"n", n},
            {"d", y.d},
            {"spectrum", spectrum_json(p)},
            {"capacity", num(proto::capacity(p))},
            {"mean_ebits_per_copy", num(y.mean_ebits_per_copy)},
            {"outcomes", outcomes}};
  return {detail::dump(j), 0};
}

inline CommandOutput cmd_teleport(const RunConfig& cfg) {
  detail::require_json(cfg);
  const int D = cfg.bell_size;
  proto::check_bell_size(D);
  std::mt19937_64 rng(cfg.effective_seed());
  Eigen::VectorXcd input(D);
  for (int i = 0; i < D; ++i) {
    const double re = detail::gaussian(rng);
    input(i) = {re, detail::gaussian(rng)};
  }
  input.normalize();
  const auto branches = proto::teleport_branches(input, proto::bell_resource(D));
  const auto run = proto::simulate_teleportation(D, input, rng);
  const auto cost = proto::teleport_resources(D);
  json amps = json::array();
  for (int i = 0; i < D; ++i) amps.push_back({num(input(i).real()), num(input(i).imag())});
  json rows = json::array();
  double min_fid = 1.0;
  for (const auto& br : branches) {
    min_fid = std::min(min_fid, br.fidelity);
    rows.push_back({{"a", br.a}, {"b", br.b}, {"probability", num(br.probability)}, {"fidelity", num(br.fidelity)}});
  }
  json j = {{"schema", "uec.teleport.v1"},
            {"bell_size", D},
            {"seed", cfg.effective_seed()},
            {"qubits", num(cost.qubits)},
            {"classical_bits", num(cost.classical_bits)},
            {"input_state", amps},
            {"branches", rows},
            {"min_fidelity", num(min_fid)},
            {"run", {{"a", run.a}, {"b", run.b}, {"fidelity", num(run.fidelity)}}}};
  return {detail::dump(j), 0};
}

inline CommandOutput cmd_densecode(const RunConfig& cfg) {
  detail::require_json(cfg);
  Eigen::MatrixXcd resource;
  std::string kind = "bell";
  int D = cfg.bell_size;
  if (!cfg.spectrum_text.empty()) {
    const auto p = parse_spectrum(cfg.spectrum_text, cfg.normalize);
    if (D != 0 && D != p.dim()) throw InputError("--bell-size must match the spectrum length");
    D = p.dim();
    resource = proto::schmidt_resource(std::vector<double>(p.values().begin(), p.values().end()));
    kind = "schmidt";
  } else {
    proto::check_bell_size(D);
    resource = proto::bell_resource(D);
  }
  std::mt19937_64 rng(cfg.effective_seed());
  json msgs = json::array();
  int correct = 0;
  for (int m = 0; m < D * D; ++m) {
    const auto probs = proto::dense_decode_distribution(m, resource);
    const int decoded = proto::simulate_dense_coding(resource, m, rng);
    correct += decoded == m;
    msgs.push_back({{"message", m}, {"decoded", decoded}, {"success_probability", num(probs[static_cast<std::size_t>(m)])}});
  }
  const BigInt N = D;
  json j = {{"schema", "uec.densecode.v1"},
            {"bell_size", D},
            {"resource", kind},
            {"seed", cfg.effective_seed()},
            {"M", big_string(N * N)},
            {"N", big_string(N)},
            {"effect_bits", num(std::log2(static_cast<double>(D)))},
            {"error_probability", num(proto::dense_coding_error(resource))},
            {"correct", correct},
            {"messages", msgs}};
  return {detail::dump(j), 0};
}

}  // namespace uec::cli
