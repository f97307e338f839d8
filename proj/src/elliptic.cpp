#include "svp/elliptic.hpp"

#include <cmath>

namespace svp {

namespace {

const cplx kTwoPiI(0, 2 * M_PI);

double sigma_power(long long n, int k) {
  double s = 0;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    long long e = n / d;
    s += std::pow(static_cast<double>(d), k);
    if (e != d) s += std::pow(static_cast<double>(e), k);
  }
  return s;
}

}  // namespace

cplx eisenstein(int k, cplx tau, double eps) {
  if (k != 2 && k != 4 && k != 6) fail(Err::invalid_input, "weight must be 2, 4 or 6");
  if (!(tau.imag() > 0)) fail(Err::not_convergent, "tau must lie in the upper half plane");
  if (!(eps > 0)) fail(Err::invalid_input, "eps must be positive");
  double c0 = k == 2 ? -1.0 / 24 : (k == 4 ? 1.0 / 240 : -1.0 / 504);
  cplx q = std::exp(kTwoPiI * tau);
  double aq = std::abs(q);
  cplx sum = c0;
  cplx qn = 1;
  for (long long n = 1; n <= 100000; ++n) {
    qn *= q;
    sum += sigma_power(n, k - 1) * qn;
    // remaining tail is below sum_{m>n} m^k |q|^m <= (n+1)^k |q|^{n+1}/(1-|q|)^2-ish
    double bound = std::pow(static_cast<double>(n + 1), k) * std::pow(aq, static_cast<double>(n + 1)) /
                   ((1 - aq) * (1 - aq));
    if (bound < eps) return sum;
  }
  fail(Err::not_convergent, "q-series did not reach the requested accuracy");
}

cplx g2star(cplx tau, double eps) {
  return eisenstein(2, tau, eps) + 1.0 / (8 * M_PI * tau.imag());
}

EllipticCurveData curve_data(const TauPoint& p, double eps) {
  if (p.lambda == cplx(0, 0)) fail(Err::invalid_input, "lambda must be nonzero");
  EllipticCurveData d;
  d.g2q = eisenstein(2, p.tau, eps);
  d.g4q = eisenstein(4, p.tau, eps);
  d.g6q = eisenstein(6, p.tau, eps);
  d.omega1 = kTwoPiI * p.lambda;
  d.omega2 = p.tau * d.omega1;
  d.eta1 = -2.0 * kTwoPiI * kTwoPiI * d.g2q / d.omega1;
  d.eta2 = (kTwoPiI + d.eta1 * d.omega2) / d.omega1;
  d.m_tau = -8 * M_PI * p.tau.imag() * g2star(p.tau, eps);
  return d;
}

SvMatrix sv_matrix_elliptic(const TauPoint& p, double eps) {
  EllipticCurveData d = curve_data(p, eps);
  double y4pi = 4 * M_PI * p.tau.imag();
  cplx m = d.m_tau, mb = std::conj(m);
  Mat core(2, 2);
  core.at(0, 0) = mb;
  core.at(0, 1) = (m * mb - 1.0) / y4pi;
  core.at(1, 0) = -y4pi;
  core.at(1, 1) = -m;
  cplx l = p.lambda, lb = std::conj(l);
  Mat s(2, 2);
  s.at(0, 0) = core.at(0, 0) * l / lb;
  s.at(0, 1) = core.at(0, 1) / (l * lb);
  s.at(1, 0) = core.at(1, 0) * l * lb;
  s.at(1, 1) = core.at(1, 1) * lb / l;

  SvMatrix out;
  out.entries = s;
  Mat I = Mat::identity(2);
  out.checks.conj_involution = max_abs(s * s.conj() - I);
  out.checks.involution = max_abs(s * s - I);
  cplx tr = s.at(0, 0) + s.at(1, 1);
  out.checks.trace_integrality = std::abs(tr - cplx(std::round(tr.real()), 0));
  out.checks.condition = 0;
  return out;
}

cplx area_pairing(const TauPoint& p) {
  return -4 * M_PI * std::norm(p.lambda) * p.tau.imag();
}

cplx area_pairing_quadrature(const TauPoint& p, int n) {
  // dx/y pulls back to omega1 dz on the torus; over {s + t*tau : s,t in [0,1]}
  // the density (1/2*pi*i) omega1 conj(omega1) (taubar - tau) is constant.
  std::vector<double> x(n), w(n);
  // Gauss-Legendre by Newton on Legendre polynomials
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1);
      double dt = p0 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
    double p0 = 1, p1 = 0;
    for (int j = 0; j < n; ++j) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
    }
    double dp = n * (t * p0 - p1) / (t * t - 1);
    w[i] = 2 / ((1 - t * t) * dp * dp);
  }
  cplx omega1 = kTwoPiI * p.lambda;
  cplx density = omega1 * std::conj(omega1) * (std::conj(p.tau) - p.tau) / kTwoPiI;
  cplx total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) total += 0.25 * w[i] * w[j] * density;
  return total;
}

CurveModel curve_model(cplx tau, double eps) {
  CurveModel cm;
  cm.u = 20.0 * eisenstein(4, tau, eps);
  cm.v = (7.0 / 3.0) * eisenstein(6, tau, eps);
  // roots of x^3 + P x + Q with P = -u/4, Q = -v/4
  cplx P = -cm.u / 4.0, Q = -cm.v / 4.0;
  cplx inner = std::sqrt(Q * Q / 4.0 + P * P * P / 27.0);
  cplx wc = std::pow(-Q / 2.0 + inner, 1.0 / 3.0);
  if (std::abs(wc) < 1e-30) wc = std::pow(-Q / 2.0 - inner, 1.0 / 3.0);
  const cplx zeta3 = std::polar(1.0, 2 * M_PI / 3);
  for (int k = 0; k < 3; ++k) {
    cplx wk = wc * std::pow(zeta3, k);
    cplx x = std::abs(wk) < 1e-30 ? cplx(0, 0) : wk - P / (3.0 * wk);
    for (int it = 0; it < 60; ++it) {  // Newton polish on 4x^3 - ux - v
      cplx f = 4.0 * x * x * x - cm.u * x - cm.v;
      cplx df = 12.0 * x * x - cm.u;
      if (std::abs(df) < 1e-30) break;
      cplx dx = f / df;
      x -= dx;
      if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    cm.roots[k] = x;
  }
  return cm;
}

}  // namespace svp
