// Development scratch runs; not part of the test suite.
#include <cstdio>

#include "svp/elliptic.hpp"
#include "svp/heights.hpp"
#include "svp/json_io.hpp"
#include "svp/svcore.hpp"

using namespace svp;

int main() {
  QuadConfig cfg;

  // 1D: dz/z along 1->2 and the unit circle
  {
    Chain seg = Chain::single(Path{{Piece::segment(ProjPoint::finite(cplx(1, 0)), ProjPoint::finite(cplx(2, 0)))}});
    Estimate e = integrate_path(dlog_z(), seg, cfg);
    std::printf("ln2: %.15f  (err %.2e, true %.15f, evals %lld)\n", e.value.real(), e.abs_error,
                std::log(2.0), e.samples_or_evals);
    Chain circ = Chain::single(Path{{Piece::circle(cplx(0, 0), 1.0)}});
    Estimate c = integrate_path(dlog_z(), circ, cfg);
    std::printf("2pi i: %.15f + %.15f i (err %.2e)\n", c.value.real(), c.value.imag(), c.abs_error);
  }

  // sphere: Example pairing, a = 2
  {
    LogForm1 nu = c0_dual_path(ProjPoint::finite(cplx(1, 0)), ProjPoint::finite(cplx(2, 0)));
    cplx closed = sphere_pairing_closed_form(nu, dlog_z());
    std::printf("closed: %.12f + %.12f i (true 2pi ln4 = %.12f)\n", closed.real(), closed.imag(),
                2 * M_PI * std::log(4.0));
    Estimate q = integrate_sphere(nu, dlog_z(), cfg);
    std::printf("sphere: %.12f + %.12f i err %.3e evals %lld  diff=%.3e\n", q.value.real(),
                q.value.imag(), q.abs_error, q.samples_or_evals, std::abs(q.value - closed));
  }

  // cauchy-stokes: acceptance 1
  {
    RadialRational psi{{0, 1}, {1, 1}};
    auto r = cauchy_stokes_pairing(dlog_z(), psi, cfg);
    std::printf("cauchy-stokes: %.12f + %.12f i  pred %.12f  resid %.3e  err %.3e\n",
                r.integral.value.real(), r.integral.value.imag(), r.predicted.real(), r.residual,
                r.integral.abs_error);
  }

  // intersections for the log family
  {
    LogFamily fam = make_log_family(cplx(2, 0));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        std::printf("M[%d][%d] = %s  ", i, j,
                    to_string(intersection_number(fam.gammas[i], fam.deltas[j])).c_str());
    std::printf("\n");
    auto rep = double_copy_check(fam.nu, fam.omega, fam.gammas, fam.deltas, cfg);
    std::printf("double copy: lhs %.10f+%.10fi rhs %.10f+%.10fi resid %.3e (lhs_err %.2e rhs_err %.2e)\n",
                rep.lhs.value.real(), rep.lhs.value.imag(), rep.rhs.real(), rep.rhs.imag(),
                rep.residual, rep.lhs.abs_error, rep.rhs_error);
  }

  // sv matrix, log family
  {
    cplx a(2, 0);
    Mat P(2, 2);
    P.at(0, 0) = 1;
    P.at(0, 1) = std::log(2.0);
    P.at(1, 0) = 0;
    P.at(1, 1) = cplx(0, 2 * M_PI);
    PeriodMatrix pm;
    pm.entries = P;
    PeriodMatrix pmb = pm;
    pmb.entries = P.conj();
    SvMatrix s = sv_matrix(pm, pmb);
    std::printf("S = [[%.10f, %.10f],[%.10f, %.10f]] checks: %.2e %.2e %.2e\n",
                s.entries.at(0, 0).real(), s.entries.at(0, 1).real(), s.entries.at(1, 0).real(),
                s.entries.at(1, 1).real(), s.checks.conj_involution, s.checks.involution,
                s.checks.trace_integrality);
  }

  // elliptic at tau = i
  {
    double eps = 1e-14;
    cplx g2i = eisenstein(2, cplx(0, 1), eps);
    std::printf("G2(i) = %.12e (true %.12e)\n", g2i.real(), -1.0 / (8 * M_PI));
    EllipticCurveData d = curve_data(TauPoint{cplx(0, 1), cplx(1, 0)}, eps);
    std::printf("eta1 = %.12f + %.12f i (want i/2)\n", d.eta1.real(), d.eta1.imag());
    std::printf("m(i) = %.3e + %.3e i\n", d.m_tau.real(), d.m_tau.imag());
    SvMatrix s = sv_matrix_elliptic(TauPoint{cplx(0, 1), cplx(1, 0)}, eps);
    std::printf("S_ell = [[%.8f, %.8f],[%.8f, %.8f]] (want [[0, %.8f],[%.8f, 0]]) checks %.2e %.2e %.2e\n",
                s.entries.at(0, 0).real(), s.entries.at(0, 1).real(), s.entries.at(1, 0).real(),
                s.entries.at(1, 1).real(), -1.0 / (4 * M_PI), -4 * M_PI,
                s.checks.conj_involution, s.checks.involution, s.checks.trace_integrality);
  }

  // heights
  {
    DivisorDeg0 D = validate_divisor({{Rat(1), ProjPoint::finite(cplx(0, 0))}, {Rat(-1), ProjPoint::infinity()}});
    DivisorDeg0 E = validate_divisor({{Rat(1), ProjPoint::finite(cplx(2, 0))}, {Rat(-1), ProjPoint::finite(cplx(3, 0))}});
    double green = green_closed_form(D, E);
    Estimate h = height_pairing(D, E, cfg);
    std::printf("height: %.12f + %.3ei (green %.12f = ln(4/9) %.12f) err %.2e\n", h.value.real(),
                h.value.imag(), green, std::log(4.0 / 9.0), h.abs_error);
  }

  // mzv series
  {
    std::printf("zeta(2) = %.15f (true %.15f)\n", mzv_series({2}), M_PI * M_PI / 6);
    std::printf("zeta(3) = %.15f (ref 1.202056903159594)\n", mzv_series({3}));
    std::printf("zeta(1,2) = %.15f (= zeta(3))\n", mzv_series({1, 2}));
    std::printf("zeta(2,3) = %.15f\n", mzv_series({2, 3}));
    std::printf("zeta(2,3) direct 1e6: ");
    double s = 0, run = 0;
    for (long long k = 1; k <= 1000000; ++k) {
      double kd = k;
      s += run / (kd * kd * kd);
      run += 1.0 / (kd * kd);
    }
    std::printf("%.15f\n", s);
  }

  // MC small runs
  {
    McConfig mcfg;
    mcfg.samples = 400000;
    mcfg.seed = 11;
    // 1D cross-check vs sphere quadrature
    LogFormN nu1;
    nu1.n = 1;
    add_term(nu1, cplx(-1, 0), {LinFactor::minus_const(1, cplx(0, 0)), LinFactor::minus_const(1, cplx(1, 0))});
    LogFormN om1;
    om1.n = 1;
    add_term(om1, cplx(1, 0), {LinFactor::minus_const(1, cplx(2, 0))});
    Estimate mc1 = integrate_mc(nu1, om1, mcfg);
    LogForm1 nu1s = c0_dual_path(ProjPoint::finite(cplx(1, 0)), ProjPoint::finite(cplx(0, 0)));
    cplx truth = sphere_pairing_closed_form(nu1s, simple_pole(cplx(2, 0)));
    std::printf("mc1: %.6f+%.6fi +- %.4f  (sphere closed %.6f+%.6fi)\n", mc1.value.real(),
                mc1.value.imag(), mc1.abs_error, truth.real(), truth.imag());

    Estimate z2 = sv_mzv({2}, mcfg);
    std::printf("sv z(2): %.6f + %.6f i +- %.6f (want 0)\n", z2.value.real(), z2.value.imag(),
                z2.abs_error);
    Estimate z3 = sv_mzv({3}, mcfg);
    std::printf("sv z(3): %.6f + %.6f i +- %.6f (want %.7f)\n", z3.value.real(), z3.value.imag(),
                z3.abs_error, 2 * 1.2020569031595943);
  }
  return 0;
}
