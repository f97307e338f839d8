#pragma once

#include <stdexcept>
#include <string>

namespace svp {

enum class Err {
  pole_on_path,
  non_convergent,
  overlapping_poles,
  non_integrable_detected,
  unbounded_test_function,
  overlapping_divisors,
  duplicate_point,
  non_generic_intersection,
  singular_matrix,
  factor_absent,
  equal_endpoints,
  divergent_index,
  non_zero_degree,
  overlapping_supports,
  degenerate_modulus,
  singular_period_matrix,
  not_convergent,
  on_singular_locus,
  invalid_input,
};

/// Stable name used in CLI output and error messages, e.g. "PoleOnPath".
const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace svp
