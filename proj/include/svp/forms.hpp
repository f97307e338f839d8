#pragma once

#include <complex>
#include <span>
#include <vector>

#include "svp/geom.hpp"

namespace svp {

/// Rational logarithmic 1-form sum c_i dz/(z - a_i) on P^1, with poles stored
/// at finite points only; the residue at infinity is -sum(c_i), implicitly.
/// The optional constant adds const * dz (needed for relative de Rham bases
/// like dz/(a-1)); it is accepted by path integration and rejected by the
/// sphere pairings.
struct LogForm1 {
  struct Term {
    cplx residue;
    cplx pole;
  };
  std::vector<Term> terms;
  cplx constant{0.0, 0.0};

  LogForm1() = default;
  LogForm1(std::initializer_list<Term> ts) : terms(ts) {}

  /// Coefficient function f with form = f(z) dz, away from poles.
  cplx eval(cplx z) const;

  friend LogForm1 operator+(const LogForm1& f, const LogForm1& g);
  friend LogForm1 operator*(cplx c, const LogForm1& f);
};

/// dz/z.
LogForm1 dlog_z();
/// dz/(z - p).
LogForm1 simple_pole(cplx p, cplx residue = cplx(1, 0));

/// Classical residue coefficient (no 2*pi*i): the listed coefficient at a
/// finite pole, -sum of them at infinity, 0 elsewhere.
cplx residue_coeff(const LogForm1& f, const ProjPoint& p);

/// The canonical log form attached to a path class from b1 to b2: residue -1
/// at b1 and +1 at b2, i.e. dlog((z-b2)/(z-b1)); terms at infinity are
/// omitted. Throws EqualEndpoints.
LogForm1 c0_dual_path(const ProjPoint& b1, const ProjPoint& b2);

/// Affine-linear denominator factor on C^n: (t_i - a) or (t_i - t_j).
/// Coordinate indices are 1-based; coord-coord factors are canonicalized to
/// i < j (construction with i > j flips the sign absorbed by the caller).
struct LinFactor {
  enum class Kind { coord_minus_const, coord_minus_coord };
  Kind kind = Kind::coord_minus_const;
  int i = 1;
  int j = 0;      // second coordinate for coord_minus_coord
  cplx a{0, 0};   // constant for coord_minus_const

  static LinFactor minus_const(int i, cplx a);
  /// Returns the canonical factor and sets sign to +1 or -1 for (t_i - t_j)
  /// rewritten with increasing indices.
  static LinFactor minus_coord(int i, int j, int& sign);

  friend bool operator==(const LinFactor& f, const LinFactor& g);
  bool operator<(const LinFactor& g) const;
};

/// Product-type logarithmic n-form on C^n:
///   (2*pi*i)^twopii_pow * sum_k scalar_k * dt_1..dt_n / prod(factors_k),
/// every factor simple in each denominator. The power of 2*pi*i is kept
/// symbolic so residue bookkeeping cancels it exactly.
struct LogFormN {
  struct Term {
    cplx scalar;
    std::vector<LinFactor> denom;  // sorted, multiplicity one
  };
  int n = 0;
  int twopii_pow = 0;
  std::vector<Term> terms;
};

/// Normalizes a term (sorts factors, checks multiplicity one) and appends it.
void add_term(LogFormN& f, cplx scalar, std::vector<LinFactor> denom);

/// c0-dual of the hypercube [0,1]^n:
///   (-1)^{n(n+1)/2} (2*pi*i)^{-n} dz_1..dz_n / (z_1(1-z_1)...z_n(1-z_n)).
LogFormN c0_dual_hypercube(int n);

/// Zeta integrand (-1)^r wedge of dt_i/(t_i - e_i) with the word
/// e = (1, 0^{n_1 - 1}, 1, 0^{n_2 - 1}, ...). Throws DivergentIndex unless
/// n_r >= 2 and every n_i >= 1.
LogFormN mzv_omega(const std::vector<int>& indices);

/// dt_1..dt_n / (t_1 (t_2 - t_1) ... (t_n - t_{n-1}) (1 - t_n)), no prefactor.
LogFormN mzv_nu(int n);

/// Wedge of one-variable log forms, coordinate k carrying forms[k-1].
/// Constants are rejected.
LogFormN wedge(const std::vector<LogForm1>& forms);

/// Poincare-Leray residue along {factor = 0}: multiplies by 2*pi*i
/// (symbolically, via twopii_pow), restricts, and drops one coordinate,
/// relabeling the remaining ones in order. For a coord-coord factor
/// (t_i - t_j) the surviving diagonal coordinate is t_j. Terms lacking the
/// factor contribute 0. Throws FactorAbsent when no term carries the factor.
LogFormN leray_residue(const LogFormN& f, const LinFactor& factor);

/// Value of the coefficient function at t (n = 0 forms evaluate to their
/// scalar). Throws OnSingularLocus when a denominator vanishes to rounding.
cplx eval_form(const LogFormN& f, std::span<const cplx> t);

/// Scalar content of a 0-form (iterated residues of an n-form).
cplx as_scalar(const LogFormN& f);

}  // namespace svp
