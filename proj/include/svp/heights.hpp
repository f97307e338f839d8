#pragma once

#include "svp/quad.hpp"

namespace svp {

/// Degree-zero rational divisor on P^1: coefficients sum to zero, points
/// pairwise distinct (infinity allowed as a point).
struct DivisorDeg0 {
  std::vector<std::pair<Rat, ProjPoint>> terms;
};

/// Checks the degree-zero and distinctness invariants.
DivisorDeg0 validate_divisor(std::vector<std::pair<Rat, ProjPoint>> terms);

/// The unique log form with residue divisor D (genus 0): sum m_i dz/(z - d_i)
/// over finite points, infinity carried implicitly. Throws NonZeroDegree.
LogForm1 nu_divisor(const DivisorDeg0& d);

/// Archimedean height pairing <D, E> by the single-valued integral
/// -(1/2*pi*i) * integral of conj(nu_D) /\ nu_E; the real part is the value
/// and the imaginary part must stay within the error bound. Throws
/// OverlappingSupports.
Estimate height_pairing(const DivisorDeg0& d, const DivisorDeg0& e, const QuadConfig& cfg);

/// Green's-function evaluation sum m_i n_j log|d_i - e_j|^2, infinity terms
/// dropped. Throws OverlappingSupports.
double green_closed_form(const DivisorDeg0& d, const DivisorDeg0& e);

/// Rational function on P^1 by zeros/poles with multiplicity and a leading
/// scalar; the divisor is completed at infinity to degree zero.
struct RationalFunction {
  std::vector<std::pair<int, cplx>> zeros;
  std::vector<std::pair<int, cplx>> poles;
  cplx leading{1, 0};

  DivisorDeg0 divisor() const;
  /// Value at a projective point (limit of leading ratio at infinity).
  cplx eval(const ProjPoint& p) const;
};

/// |<D, div f> - sum_j n_j log|f(x_j)|^2| for D = sum n_j (x_j). Throws
/// OverlappingSupports when supports meet the zeros/poles of f.
double principal_check(const DivisorDeg0& d, const RationalFunction& f, const QuadConfig& cfg);

}  // namespace svp
