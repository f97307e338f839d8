#include "svp/error.hpp"

namespace svp {

const char* err_name(Err e) {
  switch (e) {
    case Err::pole_on_path: return "PoleOnPath";
    case Err::non_convergent: return "NonConvergent";
    case Err::overlapping_poles: return "OverlappingPoles";
    case Err::non_integrable_detected: return "NonIntegrableDetected";
    case Err::unbounded_test_function: return "UnboundedTestFunction";
    case Err::overlapping_divisors: return "OverlappingDivisors";
    case Err::duplicate_point: return "DuplicatePoint";
    case Err::non_generic_intersection: return "NonGenericIntersection";
    case Err::singular_matrix: return "SingularMatrix";
    case Err::factor_absent: return "FactorAbsent";
    case Err::equal_endpoints: return "EqualEndpoints";
    case Err::divergent_index: return "DivergentIndex";
    case Err::non_zero_degree: return "NonZeroDegree";
    case Err::overlapping_supports: return "OverlappingSupports";
    case Err::degenerate_modulus: return "DegenerateModulus";
    case Err::singular_period_matrix: return "SingularPeriodMatrix";
    case Err::not_convergent: return "NotConvergent";
    case Err::on_singular_locus: return "OnSingularLocus";
    case Err::invalid_input: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace svp
