#pragma once

#include <cstdint>
#include <vector>

#include "svp/forms.hpp"
#include "svp/geom.hpp"

namespace svp {

enum class Method { adaptive1d, sphere2d, montecarlo };

struct Estimate {
  cplx value{0, 0};
  double abs_error = 0;            // claimed bound, or MC standard error
  long long samples_or_evals = 0;
  Method method = Method::adaptive1d;
};

struct QuadConfig {
  /// 0 selects the per-method default: 1e-10 for 1D, 1e-6 for sphere2d.
  double rel_tol = 0;
  int max_subdivisions = 4000;
  /// Minimum allowed distance of an integration path from a pole.
  double guard_distance = 1e-6;
  /// Radius R of the |z| <= R vs |z| >= R sphere split; 0 selects
  /// 2 * max |finite singular point| + 1.
  double chart_radius = 0;
  /// Polar patch radius = fraction * min pairwise singularity distance.
  double patch_radius_fraction = 0.45;
  /// Force the serial reference kernels (OpenMP path otherwise, capped by
  /// SVPERIOD_THREADS).
  bool serial = false;

  double tol_1d() const { return rel_tol > 0 ? rel_tol : 1e-10; }
  double tol_sphere() const { return rel_tol > 0 ? rel_tol : 1e-6; }
};

struct McConfig {
  long long samples = 1000000;
  std::uint64_t seed = 0;
  int chunks = 64;
  /// Proposal mixture centers used in every coordinate; the previous
  /// coordinate's sampled value is added as a center from coordinate 2 on.
  std::vector<cplx> proposal_centers{cplx(0, 0), cplx(1, 0)};
  double proposal_scale = 1.0;
  bool serial = false;
};

/// Contour integral of a log 1-form along a chain (Gauss-Kronrod 7/15 with
/// bisection, per piece). Throws PoleOnPath / NonConvergent.
Estimate integrate_path(const LogForm1& form, const Chain& path, const QuadConfig& cfg);

/// Integral over P^1(C) of nu /\ conj(omega) for log 1-forms with disjoint
/// simple poles: polar patches around each singular point, a w = 1/z chart
/// beyond the chart radius, and adaptive 2D quadrature on the smooth
/// remainder. Throws OverlappingPoles / NonConvergent.
Estimate integrate_sphere(const LogForm1& nu, const LogForm1& omega, const QuadConfig& cfg);

/// Closed form of the same pairing:
///   2*pi*i * sum_{p,q finite} res_p(nu) * conj(res_q(omega)) * log|p-q|^2,
/// infinity terms dropped under the residue-sum-zero gauge.
cplx sphere_pairing_closed_form(const LogForm1& nu, const LogForm1& omega);

/// Importance-sampled Monte Carlo estimate of the C^n integral
/// nu /\ conj(omega). abs_error is the standard error over independent
/// sample chunks; identical (samples, seed, chunks) gives bit-identical
/// output. Throws NonIntegrableDetected on runaway chunk variance.
Estimate integrate_mc(const LogFormN& nu, const LogFormN& omega, const McConfig& mcfg);

/// Bounded radial test function P(u)/Q(u) with u = |z|^2, deg P <= deg Q and
/// Q nonvanishing on [0, inf).
struct RadialRational {
  std::vector<double> num;  // ascending coefficients
  std::vector<double> den;

  double eval(double u) const;
  double deriv(double u) const;
  double value_at_infinity() const;
};

struct CauchyStokesResult {
  Estimate integral;   // (1/2*pi*i) * quadrature value
  cplx predicted;      // sum of residue * psi(pole) over poles incl. infinity
  double residual;     // |integral.value - predicted|
};

/// (1/2*pi*i) * integral over P^1(C) of omega /\ d(psi o conj), with the exact
/// residue-sum predictor. Throws UnboundedTestFunction.
CauchyStokesResult cauchy_stokes_pairing(const LogForm1& omega, const RadialRational& psi,
                                         const QuadConfig& cfg);

}  // namespace svp
