#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "svp/geom.hpp"

namespace svp {

using ordered_json = nlohmann::ordered_json;

struct Check {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool pass() const { return residual <= tolerance; }
};

/// Machine-readable result of one CLI command. Serialization is field-order
/// stable so identical runs produce byte-identical JSON (wall_time_ms aside).
struct Report {
  std::string command;
  ordered_json inputs;
  ordered_json values;
  double abs_error = 0;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  long long evals = 0;
  long long wall_time_ms = 0;

  int failed_checks() const;
  ordered_json to_json() const;
  static Report from_json(const ordered_json& j);
};

/// JSON encodings shared by reports, fixtures and input files:
/// complex as [re, im], infinity as "inf", rationals as "p/q".
ordered_json json_complex(cplx z);
ordered_json json_point(const ProjPoint& p);
ordered_json json_rat(const Rat& r);

}  // namespace svp
