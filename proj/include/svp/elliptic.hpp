#pragma once

#include "svp/svcore.hpp"

namespace svp {

/// Point of the upper half plane plus the normalization omega_1 = lambda * 2*pi*i.
struct TauPoint {
  cplx tau;
  cplx lambda{1, 0};
};

struct EllipticCurveData {
  cplx omega1, omega2;  // periods, omega2 = tau * omega1
  cplx eta1, eta2;      // quasi-periods
  cplx g2q, g4q, g6q;   // normalized Eisenstein values at tau
  cplx m_tau;           // -8*pi*Im(tau)*G2*(tau)
};

/// Normalized Eisenstein series of weight k in {2, 4, 6} with constant terms
/// -1/24, 1/240, -1/504, truncated so the dropped q-tail is below eps.
/// Throws NotConvergent for Im(tau) <= 0.
cplx eisenstein(int k, cplx tau, double eps);

/// G2*(tau) = G2(tau) + 1/(8*pi*Im(tau)), the weight-2 real-analytic
/// completion.
cplx g2star(cplx tau, double eps);

/// Periods and quasi-periods generated from tau: omega_1 = 2*pi*i*lambda,
/// omega_2 = tau*omega_1, eta_1 from G2 = -(1/2) omega_1 eta_1 / (2*pi*i)^2,
/// eta_2 from omega_1 eta_2 - eta_1 omega_2 = 2*pi*i.
EllipticCurveData curve_data(const TauPoint& p, double eps);

/// The closed-form single-valued matrix conj(P)^{-1} P of the elliptic rank-2
/// family:
///   diag(conj(lambda)^{-1}, conj(lambda))
///     * [[conj(m), (4*pi*Im tau)^{-1} (m*conj(m) - 1)], [-4*pi*Im tau, -m]]
///     * diag(lambda, lambda^{-1}),
/// m = m_tau. Checks for S*conj(S) = I, S^2 = I and trace are populated.
SvMatrix sv_matrix_elliptic(const TauPoint& p, double eps);

/// -4*pi*|lambda|^2*Im(tau), the convergent self-pairing of dx/y.
cplx area_pairing(const TauPoint& p);

/// The same value by quadrature of the constant pullback density over the
/// fundamental parallelogram {s + t*tau}, with an n-point Gauss rule per axis.
cplx area_pairing_quadrature(const TauPoint& p, int n = 8);

/// Coefficients of the plane model y^2 = 4x^3 - u x - v attached to tau
/// (u = 20*G4, v = (7/3)*G6) and its roots; used by the contour oracle and
/// recorded as derived metadata.
struct CurveModel {
  cplx u, v;
  cplx roots[3];
};
CurveModel curve_model(cplx tau, double eps);

}  // namespace svp
