#include "svp/report.hpp"

namespace svp {

int Report::failed_checks() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass() ? 0 : 1;
  return n;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["schema_version"] = "1";
  j["command"] = command;
  j["inputs"] = inputs;
  j["values"] = values;
  j["abs_error"] = abs_error;
  ordered_json cs = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["residual"] = c.residual;
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass();
    cs.push_back(cj);
  }
  j["checks"] = cs;
  j["seed"] = seed;
  j["evals"] = evals;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

Report Report::from_json(const ordered_json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.values = j.at("values");
  r.abs_error = j.at("abs_error").get<double>();
  for (const auto& cj : j.at("checks")) {
    Check c;
    c.name = cj.at("name").get<std::string>();
    c.residual = cj.at("residual").get<double>();
    c.tolerance = cj.at("tolerance").get<double>();
    r.checks.push_back(c);
  }
  r.seed = j.at("seed").get<std::uint64_t>();
  r.evals = j.at("evals").get<long long>();
  r.wall_time_ms = j.at("wall_time_ms").get<long long>();
  return r;
}

ordered_json json_complex(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json json_point(const ProjPoint& p) {
  if (p.infinite) return "inf";
  return json_complex(p.z);
}

ordered_json json_rat(const Rat& r) { return to_string(r); }

}  // namespace svp
