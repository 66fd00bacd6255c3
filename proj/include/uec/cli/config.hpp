#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "uec/errors.hpp"
#include "uec/young/spectrum.hpp"

namespace uec::cli {

/// Seed used when --seed is 0 (the default), so runs are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 0x243F6A8885A308D3ULL;

enum class Format { Json, Csv };

struct RunConfig {
  std::string subcommand;
  std::string check_kind;  ///< dims | lemma3 | completeness
  std::string spectrum_text;
  bool normalize = false;
  int n = 0;
  bool has_n = false;
  int d = 0;
  int n_max = 0;
  long long shots = 0;
  std::uint64_t seed = 0;
  std::optional<double> rate_min, rate_max;
  std::optional<int> steps;
  std::optional<Format> format;
  std::string out_path;
  bool certify_bell = false;
  int bell_size = 0;

  [[nodiscard]] std::uint64_t effective_seed() const { return seed == 0 ? kDefaultSeed : seed; }
  [[nodiscard]] Format format_or(Format fallback) const { return format.value_or(fallback); }
};

/// Parses "0.75,0.25". The sum must be within 1e-9 of one unless `normalize`.
inline young::Spectrum parse_spectrum(const std::string& text, bool normalize) {
  if (text.empty()) throw InputError("--spectrum is required");
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string field = text.substr(pos, comma - pos);
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size()) throw InputError("cannot parse spectrum entry '" + field + "'");
    values.push_back(v);
    pos = comma + 1;
  }
  if (normalize) return young::Spectrum::normalized(std::move(values));
  return young::Spectrum(std::move(values), 1e-9);
}

}  // namespace uec::cli
