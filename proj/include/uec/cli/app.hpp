#pragma once

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "uec/cli/commands.hpp"

namespace uec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGuard = 3;

inline CommandOutput dispatch(const RunConfig& cfg) {
  const auto& s = cfg.subcommand;
  if (s == "dist") return cmd_dist(cfg);
  if (s == "simulate") return cmd_simulate(cfg);
  if (s == "sample") return cmd_sample(cfg);
  if (s == "exponent") return cmd_exponent(cfg);
  if (s == "tail") return cmd_tail(cfg);
  if (s == "check") return cmd_check(cfg);
  if (s == "yield") return cmd_yield(cfg);
  if (s == "teleport") return cmd_teleport(cfg);
  if (s == "densecode") return cmd_densecode(cfg);
  throw InputError("unknown subcommand " + s);
}

/// Parses argv, runs one subcommand and writes its output to `out` (or --out).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal entanglement concentration: distributions, exact simulation, exponents, protocols"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out_path, "write output to this file instead of standard output");
  };
  auto add_spectrum = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--spectrum", cfg.spectrum_text, "comma-separated Schmidt coefficients squared");
    if (required) opt->required();
    sub->add_flag("--normalize", cfg.normalize, "rescale the spectrum to sum to one");
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option_function<int>("--n", [&](int v) { cfg.n = v, cfg.has_n = true; }, "number of copies");
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "64-bit seed; 0 selects the fixed default"); };
  auto add_rates = [&](CLI::App* sub) {
    sub->add_option_function<double>("--rate-min", [&](double v) { cfg.rate_min = v; }, "lowest rate, bits per copy");
    sub->add_option_function<double>("--rate-max", [&](double v) { cfg.rate_max = v; }, "highest rate, bits per copy");
    sub->add_option_function<int>("--steps", [&](int v) { cfg.steps = v; }, "number of grid points");
  };

  auto* dist = app.add_subcommand("dist", "closed-form Young-diagram outcome distribution");
  add_spectrum(dist, true), add_n(dist), add_common(dist);

  auto* simulate = app.add_subcommand("simulate", "exact state-vector simulation of the block measurement");
  add_spectrum(simulate, true), add_n(simulate), add_common(simulate);
  simulate->add_flag("--certify-bell", cfg.certify_bell, "run the qubit Schur transform and report Bell fidelities");

  auto* sample = app.add_subcommand("sample", "RSK sampling of outcome shapes");
  add_spectrum(sample, true), add_n(sample), add_seed(sample), add_common(sample);
  sample->add_option("--shots", cfg.shots, "number of samples")->required();

  auto* exponent = app.add_subcommand("exponent", "failure exponents on a rate grid");
  add_spectrum(exponent, true), add_n(exponent), add_rates(exponent), add_common(exponent);

  auto* tail = app.add_subcommand("tail", "exact tail probabilities of the Bell size");
  add_spectrum(tail, true), add_n(tail), add_rates(tail), add_common(tail);

  auto* check = app.add_subcommand("check", "numerical checks (dims | lemma3 | completeness)");
  check->add_option("kind", cfg.check_kind, "dims, lemma3 or completeness")
      ->required()
      ->check(CLI::IsMember({"dims", "lemma3", "completeness"}));
  add_spectrum(check, false), add_common(check);
  check->add_option("--d", cfg.d, "local dimension");
  check->add_option("--n-max", cfg.n_max, "largest number of copies")->required();

  auto* yield = app.add_subcommand("yield", "Bell-state yield table");
  add_spectrum(yield, true), add_n(yield), add_common(yield);

  auto* teleport = app.add_subcommand("teleport", "teleportation over a perfect Bell pair");
  teleport->add_option("--bell-size", cfg.bell_size, "Bell pair size D")->required();
  add_seed(teleport), add_common(teleport);

  auto* densecode = app.add_subcommand("densecode", "dense coding over a Bell pair or a given Schmidt resource");
  densecode->add_option("--bell-size", cfg.bell_size, "Bell pair size D");
  add_spectrum(densecode, false), add_seed(densecode), add_common(densecode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (!format.empty()) cfg.format = format == "csv" ? Format::Csv : Format::Json;

  try {
    const auto result = dispatch(cfg);
    if (cfg.out_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw InputError("cannot open output file " + cfg.out_path);
      file << result.text;
    }
    return result.exit_code;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const uec::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace uec::cli
