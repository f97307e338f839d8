#include <algorithm>
#include <cmath>

#include "quad_detail.hpp"
#include "svp/parallel.hpp"

namespace svp {

namespace {

constexpr double kPoleMatchTol = 1e-9;

// Gauss-Legendre 8 on [-1, 1].
constexpr double kGlx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975363};
constexpr double kGlw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

// Coefficient of dw for a log form rewritten in the w = 1/z chart:
// f(1/w) * (-1/w^2) = -(1/w) * sum c_i / (1 - a_i w).
cplx eval_wchart(const LogForm1& f, cplx w) {
  cplx s = 0;
  for (const auto& t : f.terms) s += t.residue / (1.0 - t.pole * w);
  return -s / w;
}

struct SphereKernel {
  std::function<cplx(cplx)> density_z;  // area density in the z chart
  std::function<cplx(cplx)> density_w;  // area density in the w = 1/z chart
  std::vector<cplx> centers;            // finite singular points
};

struct Contribution {
  cplx value{0, 0};
  double error = 0;
  long long evals = 0;
  bool exhausted = false;
};

struct PatchSpec {
  cplx center;
  double rmax;
  // Finite patch: cutoff 1 below ramp_lo, 0 above ramp_hi (radii around the
  // center). Chart patch: the infinity cutoff chi(|z|) read through w = 1/z,
  // with ramp_lo/ramp_hi holding the z-side radii R1 < R.
  double ramp_lo, ramp_hi;
  bool wchart;
};

double patch_cut(const PatchSpec& p, double rho) {
  if (p.wchart)
    return detail::smoothstep((1.0 / rho - p.ramp_lo) / (p.ramp_hi - p.ramp_lo));
  return 1.0 - detail::smoothstep((rho - p.ramp_lo) / (p.ramp_hi - p.ramp_lo));
}

Contribution integrate_patch(const SphereKernel& k, const PatchSpec& p, double abs_tol,
                             int max_subdivisions) {
  Contribution out;
  const auto& density = p.wchart ? k.density_w : k.density_z;
  double theta_tol = 0.1 * abs_tol / p.rmax;
  auto ring = [&](double rho) -> cplx {
    double cut = patch_cut(p, rho);
    if (cut == 0.0) return cplx(0, 0);
    double terr = 0;
    cplx avg = detail::trapezoid_periodic(
        [&](double th) { return density(p.center + rho * std::polar(1.0, th)); }, theta_tol, 16,
        16384, &terr, &out.evals);
    return cut * rho * avg;
  };
  auto r = detail::adaptive_1d(ring, 0.0, p.rmax, abs_tol, max_subdivisions, &out.exhausted);
  out.value = r.value;
  out.error = r.error + 0.1 * abs_tol;
  out.evals += r.evals;
  return out;
}

struct Cell {
  double x0, y0, x1, y1;
  int depth;
};

cplx cell_rule(const std::function<cplx(cplx)>& g, const Cell& c, long long& evals) {
  double hx = 0.5 * (c.x1 - c.x0), hy = 0.5 * (c.y1 - c.y0);
  double cx = 0.5 * (c.x0 + c.x1), cy = 0.5 * (c.y0 + c.y1);
  cplx s = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      s += kGlw[i] * kGlw[j] * g(cplx(cx + hx * kGlx[i], cy + hy * kGlx[j]));
  evals += 64;
  return s * (hx * hy);
}

Contribution integrate_rest(const SphereKernel& k, const std::vector<PatchSpec>& patches,
                            double R, double ramp_in, double abs_tol, long long cell_budget,
                            bool serial) {
  // weight vanishing smoothly at every patch core and beyond the chart radius
  auto weight = [&](cplx z) {
    double w = 1.0 - detail::smoothstep((std::abs(z) - ramp_in) / (R - ramp_in));
    for (const auto& p : patches)
      if (!p.wchart) w -= patch_cut(p, std::abs(z - p.center));
    return w;
  };
  auto g = [&](cplx z) -> cplx {
    double w = weight(z);
    if (w == 0.0) return cplx(0, 0);
    return w * k.density_z(z);
  };

  Contribution out;
  const int kInitial = 8, kMaxDepth = 14;
  std::vector<Cell> level;
  for (int i = 0; i < kInitial; ++i)
    for (int j = 0; j < kInitial; ++j)
      level.push_back({-R + 2 * R * i / kInitial, -R + 2 * R * j / kInitial,
                       -R + 2 * R * (i + 1) / kInitial, -R + 2 * R * (j + 1) / kInitial, 0});
  double total_area = 4 * R * R;
  std::vector<cplx> leaf_values;
  long long processed = 0;

  struct CellResult {
    cplx coarse, fine;
    long long evals;
  };
  while (!level.empty()) {
    auto results = map_indexed<CellResult>(
        level.size(),
        [&](size_t idx) {
          const Cell& c = level[idx];
          CellResult r{};
          r.coarse = cell_rule(g, c, r.evals);
          double mx = 0.5 * (c.x0 + c.x1), my = 0.5 * (c.y0 + c.y1);
          Cell q[4] = {{c.x0, c.y0, mx, my, c.depth + 1},
                       {mx, c.y0, c.x1, my, c.depth + 1},
                       {c.x0, my, mx, c.y1, c.depth + 1},
                       {mx, my, c.x1, c.y1, c.depth + 1}};
          for (const auto& qc : q) r.fine += cell_rule(g, qc, r.evals);
          return r;
        },
        serial);
    std::vector<Cell> next;
    for (size_t idx = 0; idx < level.size(); ++idx) {
      const Cell& c = level[idx];
      out.evals += results[idx].evals;
      ++processed;
      double err = std::abs(results[idx].fine - results[idx].coarse);
      double area = (c.x1 - c.x0) * (c.y1 - c.y0);
      bool budget_hit = processed + static_cast<long long>(next.size()) > cell_budget;
      if (err <= abs_tol * (area / total_area) || c.depth >= kMaxDepth || budget_hit) {
        leaf_values.push_back(results[idx].fine);
        out.error += err;
        if (err > abs_tol * (area / total_area) && (c.depth >= kMaxDepth || budget_hit))
          out.exhausted = true;
        continue;
      }
      double mx = 0.5 * (c.x0 + c.x1), my = 0.5 * (c.y0 + c.y1);
      next.push_back({c.x0, c.y0, mx, my, c.depth + 1});
      next.push_back({mx, c.y0, c.x1, my, c.depth + 1});
      next.push_back({c.x0, my, mx, c.y1, c.depth + 1});
      next.push_back({mx, my, c.x1, c.y1, c.depth + 1});
    }
    level = std::move(next);
  }
  out.value = pairwise_sum(leaf_values);
  return out;
}

Estimate integrate_p1(const SphereKernel& k, const QuadConfig& cfg) {
  double maxabs = 0;
  for (const auto& c : k.centers) maxabs = std::max(maxabs, std::abs(c));
  double R = cfg.chart_radius > 0 ? cfg.chart_radius : 2 * maxabs + 1;
  if (R <= 1.15 * maxabs)
    fail(Err::invalid_input, "chart_radius too small for the singular points");
  double R1 = 0.75 * R;

  double minpair = INFINITY;
  for (size_t i = 0; i < k.centers.size(); ++i)
    for (size_t j = i + 1; j < k.centers.size(); ++j)
      minpair = std::min(minpair, std::abs(k.centers[i] - k.centers[j]));

  std::vector<PatchSpec> patches;
  for (const auto& c : k.centers) {
    double r = 0.45 * (R1 - std::abs(c));
    if (std::isfinite(minpair)) r = std::min(r, cfg.patch_radius_fraction * minpair);
    PatchSpec p{c, 0.9 * r, 0.35 * r, 0.9 * r, false};
    patches.push_back(p);
  }
  patches.push_back(PatchSpec{cplx(0, 0), 1.0 / R1, R1, R, true});

  // rough magnitudes fix the absolute budgets
  long long rough_evals = 0;
  double scale = 0;
  for (const auto& p : patches) {
    const auto& density = p.wchart ? k.density_w : k.density_z;
    auto ring = [&](double rho) -> cplx {
      double cut = patch_cut(p, rho);
      if (cut == 0.0) return cplx(0, 0);
      cplx s = 0;
      for (int t = 0; t < 32; ++t) s += density(p.center + rho * std::polar(1.0, 2 * M_PI * t / 32.0));
      rough_evals += 32;
      return cut * rho * s * (2 * M_PI / 32.0);
    };
    scale += std::abs(detail::gk15(ring, 0.0, p.rmax).value);
  }
  scale = std::max(scale, 1e-30);
  double tol_total = cfg.tol_sphere() * scale;
  double patch_tol = 0.4 * tol_total / static_cast<double>(patches.size());
  double rest_tol = 0.5 * tol_total;

  auto contributions = map_indexed<Contribution>(
      patches.size(),
      [&](size_t i) { return integrate_patch(k, patches[i], patch_tol, cfg.max_subdivisions); },
      cfg.serial);
  long long cell_budget = std::max<long long>(20000, 50LL * cfg.max_subdivisions);
  Contribution rest = integrate_rest(k, patches, R, R1, rest_tol, cell_budget, cfg.serial);

  Estimate out;
  out.method = Method::sphere2d;
  std::vector<cplx> parts;
  for (const auto& c : contributions) {
    parts.push_back(c.value);
    out.abs_error += c.error;
    out.samples_or_evals += c.evals;
    if (c.exhausted) fail(Err::non_convergent, "polar patch refinement exhausted");
  }
  parts.push_back(rest.value);
  out.abs_error += rest.error;
  out.samples_or_evals += rest.evals + rough_evals;
  if (rest.exhausted && rest.error > 10 * tol_total)
    fail(Err::non_convergent, "cell budget exhausted on the smooth region");
  out.value = pairwise_sum(parts);
  return out;
}

// Shared validation for the sphere pairings.
void check_log_pair(const LogForm1& nu, const LogForm1& omega) {
  if (nu.constant != cplx(0, 0) || omega.constant != cplx(0, 0))
    fail(Err::invalid_input, "constant dz terms are not logarithmic on the sphere");
  for (const auto& a : nu.terms)
    for (const auto& b : omega.terms)
      if (std::abs(a.pole - b.pole) < kPoleMatchTol)
        fail(Err::overlapping_poles,
             "shared pole at " + to_string(ProjPoint::finite(a.pole)));
  cplx rinf_nu = residue_coeff(nu, ProjPoint::infinity());
  cplx rinf_om = residue_coeff(omega, ProjPoint::infinity());
  if (std::abs(rinf_nu) > 1e-13 && std::abs(rinf_om) > 1e-13)
    fail(Err::overlapping_poles, "both forms have a pole at infinity");
}

}  // namespace

Estimate integrate_sphere(const LogForm1& nu, const LogForm1& omega, const QuadConfig& cfg) {
  check_log_pair(nu, omega);
  Estimate out;
  out.method = Method::sphere2d;
  if (nu.terms.empty() || omega.terms.empty()) return out;

  SphereKernel k;
  k.density_z = [&](cplx z) { return cplx(0, -2) * nu.eval(z) * std::conj(omega.eval(z)); };
  k.density_w = [&](cplx w) {
    return cplx(0, -2) * eval_wchart(nu, w) * std::conj(eval_wchart(omega, w));
  };
  for (const auto& t : nu.terms) k.centers.push_back(t.pole);
  for (const auto& t : omega.terms) k.centers.push_back(t.pole);
  return integrate_p1(k, cfg);
}

cplx sphere_pairing_closed_form(const LogForm1& nu, const LogForm1& omega) {
  check_log_pair(nu, omega);
  // 2*pi*i * sum res_p(nu) conj(res_q(omega)) log|p - q|^2; the infinity
  // residues never enter because the primitive of omega + conj(omega)
  // vanishes at infinity in the residue-sum-zero gauge.
  cplx s = 0;
  for (const auto& a : nu.terms)
    for (const auto& b : omega.terms)
      s += a.residue * std::conj(b.residue) * std::log(std::norm(a.pole - b.pole));
  return cplx(0, 2 * M_PI) * s;
}

double RadialRational::eval(double u) const {
  double p = 0, q = 0;
  for (size_t i = num.size(); i-- > 0;) p = p * u + num[i];
  for (size_t i = den.size(); i-- > 0;) q = q * u + den[i];
  return p / q;
}

double RadialRational::deriv(double u) const {
  double p = 0, q = 0, dp = 0, dq = 0;
  for (size_t i = num.size(); i-- > 0;) { dp = dp * u + p; p = p * u + num[i]; }
  for (size_t i = den.size(); i-- > 0;) { dq = dq * u + q; q = q * u + den[i]; }
  return (dp * q - p * dq) / (q * q);
}

double RadialRational::value_at_infinity() const {
  size_t dp = num.size(), dq = den.size();
  while (dp > 0 && num[dp - 1] == 0.0) --dp;
  while (dq > 0 && den[dq - 1] == 0.0) --dq;
  if (dp == 0) return 0.0;
  if (dp < dq) return 0.0;
  return num[dp - 1] / den[dq - 1];
}

CauchyStokesResult cauchy_stokes_pairing(const LogForm1& omega, const RadialRational& psi,
                                         const QuadConfig& cfg) {
  size_t dp = psi.num.size(), dq = psi.den.size();
  while (dp > 0 && psi.num[dp - 1] == 0.0) --dp;
  while (dq > 0 && psi.den[dq - 1] == 0.0) --dq;
  if (dq == 0 || dp > dq)
    fail(Err::unbounded_test_function, "psi must be bounded on the closed sphere");
  // Q must keep one sign on [0, inf); sample densely on a log-spaced grid
  double qscale = 0;
  for (double c : psi.den) qscale = std::max(qscale, std::abs(c));
  double q0 = psi.eval(0), first = 0;
  (void)q0;
  for (int i = 0; i <= 4000; ++i) {
    double u = i == 0 ? 0.0 : std::pow(10.0, -6.0 + 12.0 * i / 4000.0);
    double q = 0;
    for (size_t k = psi.den.size(); k-- > 0;) q = q * u + psi.den[k];
    if (std::abs(q) < 1e-12 * qscale)
      fail(Err::unbounded_test_function, "denominator vanishes on [0, inf)");
    if (i == 0)
      first = q;
    else if (q * first < 0)
      fail(Err::unbounded_test_function, "denominator changes sign on [0, inf)");
  }
  if (omega.constant != cplx(0, 0))
    fail(Err::invalid_input, "constant dz terms are not logarithmic on the sphere");

  CauchyStokesResult res;
  res.integral.method = Method::sphere2d;
  if (!omega.terms.empty()) {
    SphereKernel k;
    k.density_z = [&](cplx z) {
      return cplx(0, -2) * psi.deriv(std::norm(z)) * z * omega.eval(z);
    };
    k.density_w = [&](cplx w) {
      double u = 1.0 / std::norm(w);
      cplx wb = std::conj(w);
      return cplx(0, 2) * eval_wchart(omega, w) * psi.deriv(u) / (w * wb * wb);
    };
    for (const auto& t : omega.terms) k.centers.push_back(t.pole);
    Estimate raw = integrate_p1(k, cfg);
    res.integral = raw;
    res.integral.value = raw.value / cplx(0, 2 * M_PI);
    res.integral.abs_error = raw.abs_error / (2 * M_PI);
  }
  cplx pred = 0;
  for (const auto& t : omega.terms) pred += t.residue * psi.eval(std::norm(t.pole));
  pred += residue_coeff(omega, ProjPoint::infinity()) * psi.value_at_infinity();
  res.predicted = pred;
  res.residual = std::abs(res.integral.value - pred);
  return res;
}

}  // namespace svp
