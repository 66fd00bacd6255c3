#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "uec/numeric.hpp"
#include "uec/young/partition.hpp"

namespace uec::cli {

using json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so that printed values are stable.
inline double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

/// JSON number at 12 significant digits; null for non-finite values.
inline json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

inline std::string csv_num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

inline std::string big_string(const BigInt& x) { return x.str(); }

/// Partition as an array of exactly d integers.
inline json partition_json(const young::Partition& lambda, int d) {
  std::vector<int> rows = lambda.parts();
  while (static_cast<int>(rows.size()) > d && rows.back() == 0) rows.pop_back();
  rows.resize(static_cast<std::size_t>(std::max(d, static_cast<int>(rows.size()))), 0);
  return rows;
}

inline std::string partition_csv(const young::Partition& lambda, int d) {
  std::string s;
  for (int v : partition_json(lambda, d)) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

inline json spectrum_json(const young::Spectrum& p) {
  json arr = json::array();
  for (double x : p.values()) arr.push_back(num(x));
  return arr;
}

/// Minimal RFC 4180 writer: fields containing separators or quotes are quoted.
class CsvWriter {
 public:
  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      const auto& f = fields[i];
      if (f.find_first_of(",\"\r\n") != std::string::npos) {
        out_ << '"';
        for (char c : f) out_ << (c == '"' ? "\"\"" : std::string(1, c));
        out_ << '"';
      } else {
        out_ << f;
      }
    }
    out_ << "\r\n";
  }
  [[nodiscard]] std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace uec::cli
