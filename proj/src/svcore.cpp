#include "svp/svcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace svp {

namespace {

const cplx kTwoPiI(0, 2 * M_PI);

std::string form_label(const LogForm1& f) {
  std::ostringstream os;
  bool first = true;
  if (f.constant != cplx(0, 0)) {
    os << "c*dz";
    first = false;
  }
  for (const auto& t : f.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.residue.real();
    if (t.residue.imag() != 0) os << (t.residue.imag() > 0 ? "+" : "") << t.residue.imag() << "i";
    os << ")dz/(z-" << to_string(ProjPoint::finite(t.pole)) << ")";
  }
  if (first) os << "0";
  return os.str();
}

double dist_point_segment(cplx p, cplx a, cplx b) {
  cplx d = b - a;
  double t = std::real(std::conj(d) * (p - a)) / std::norm(d);
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

double dist_point_ray(cplx p, cplx u) {  // ray {t*u : t >= 0}, |u| = 1
  double t = std::max(0.0, std::real(std::conj(u) * p));
  return std::abs(p - t * u);
}

bool ray_hits_segment(cplx u, cplx a, cplx b) {
  // s*u = a + t*d with s >= 0, t in [0, 1]
  auto cross = [](cplx x, cplx y) { return std::imag(std::conj(x) * y); };
  cplx d = b - a;
  double den = cross(u, d);
  if (std::abs(den) < 1e-15 * std::abs(d)) return false;
  double s = cross(a, d) / den;
  double t = cross(a, u) / den;
  return s >= 0 && t >= 0 && t <= 1;
}

double dist_ray_segment(cplx u, cplx a, cplx b) {
  if (ray_hits_segment(u, a, b)) return 0.0;
  return std::min({dist_point_ray(a, u), dist_point_ray(b, u), dist_point_segment(cplx(0, 0), a, b)});
}

}  // namespace

PeriodMatrix period_matrix(const Configuration& config, const std::vector<LogForm1>& forms,
                           const std::vector<Chain>& chains, const QuadConfig& cfg) {
  (void)config;
  PeriodMatrix pm;
  int r = static_cast<int>(chains.size()), c = static_cast<int>(forms.size());
  pm.entries = Mat(r, c);
  pm.entry_errors = Mat(r, c);
  for (int i = 0; i < r; ++i) pm.row_labels.push_back("chain[" + std::to_string(i) + "]");
  for (int j = 0; j < c; ++j) pm.col_labels.push_back(form_label(forms[j]));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      Estimate e = integrate_path(forms[j], chains[i], cfg);
      pm.entries.at(i, j) = e.value;
      pm.entry_errors.at(i, j) = e.abs_error;
    }
  return pm;
}

SvMatrix sv_matrix(const PeriodMatrix& P, const PeriodMatrix& Pbar) {
  if (P.entries.rows != P.entries.cols)
    fail(Err::invalid_input, "single-valued matrix needs a square period matrix");
  if (Pbar.entries.rows != P.entries.rows || Pbar.entries.cols != P.entries.cols)
    fail(Err::invalid_input, "period matrices must have matching shape");
  SvMatrix out;
  int n = P.entries.rows;
  if (n == 0) {
    out.entries = Mat(0, 0);
    return out;
  }
  out.entries = solve(Pbar.entries, P.entries, Err::singular_period_matrix,
                      &out.checks.condition);
  Mat I = Mat::identity(n);
  out.checks.conj_involution = max_abs(out.entries * out.entries.conj() - I);
  out.checks.involution = max_abs(out.entries * out.entries - I);
  cplx tr = 0;
  for (int i = 0; i < n; ++i) tr += out.entries.at(i, i);
  out.checks.trace_integrality = std::abs(tr - cplx(std::round(tr.real()), 0));
  return out;
}

Estimate sv_pairing(const LogForm1& nu, const LogForm1& omega, const QuadConfig& cfg) {
  Estimate e = integrate_sphere(nu, omega, cfg);
  e.value /= kTwoPiI;
  e.abs_error /= 2 * M_PI;
  return e;
}

Estimate sv_log(cplx a, const QuadConfig& cfg, double* direct_out) {
  if (a == cplx(0, 0) || a == cplx(1, 0) || !std::isfinite(a.real()) || !std::isfinite(a.imag()))
    fail(Err::degenerate_modulus, "sv_log needs a outside {0, 1, inf}");
  if (direct_out) *direct_out = std::log(std::norm(a));
  return sv_pairing(c0_dual_path(ProjPoint::finite(cplx(1, 0)), ProjPoint::finite(a)), dlog_z(),
                    cfg);
}

LogFamily make_log_family(cplx a) {
  if (a == cplx(0, 0) || a == cplx(1, 0))
    fail(Err::degenerate_modulus, "logarithm family needs a outside {0, 1}");
  LogFamily fam;
  fam.a = a;
  fam.nu = c0_dual_path(ProjPoint::finite(cplx(1, 0)), ProjPoint::finite(a));
  fam.omega = dlog_z();

  double min_scale = std::min({1.0, std::abs(a), std::abs(a - 1.0)});

  // delta_2: 1 -> a, detouring when the straight segment passes near 0
  std::vector<std::pair<cplx, cplx>> d2_segments;
  if (dist_point_segment(cplx(0, 0), cplx(1, 0), a) > 0.3 * min_scale) {
    d2_segments.emplace_back(cplx(1, 0), a);
  } else {
    cplx perp = cplx(0, 1) * (a - 1.0) / std::abs(a - 1.0);
    double h = std::max(0.8, 0.5 * std::abs(a - 1.0));
    cplx mid = 0.5 * (1.0 + a);
    cplx m = std::abs(mid + h * perp) >= std::abs(mid - h * perp) ? mid + h * perp : mid - h * perp;
    d2_segments.emplace_back(cplx(1, 0), m);
    d2_segments.emplace_back(m, a);
  }

  // gamma_1 leaves 0 radially in the direction farthest from delta_2 and
  // the punctures 1, a
  double best_phi = 0, best_clear = -1;
  for (int k = 0; k < 256; ++k) {
    double phi = 2 * M_PI * k / 256;
    cplx u = std::polar(1.0, phi);
    double clear = INFINITY;
    for (const auto& [s0, s1] : d2_segments) clear = std::min(clear, dist_ray_segment(u, s0, s1));
    if (clear > best_clear) {
      best_clear = clear;
      best_phi = phi;
    }
  }
  if (best_clear < 0.05 * min_scale)
    fail(Err::invalid_input, "could not route the 0->inf path away from the 1->a path");
  cplx anchor = std::polar(1.0, best_phi);

  Path g1;
  g1.pieces.push_back(Piece::segment(ProjPoint::finite(cplx(0, 0)), ProjPoint::finite(anchor)));
  g1.pieces.push_back(Piece::segment(ProjPoint::finite(anchor), ProjPoint::infinity()));

  double dist0_d2 = INFINITY;
  for (const auto& [s0, s1] : d2_segments)
    dist0_d2 = std::min(dist0_d2, dist_point_segment(cplx(0, 0), s0, s1));
  double r0 = 0.4 * std::min({1.0, std::abs(a), dist0_d2});

  double r1 = 0.4 * std::min(std::abs(a - 1.0), 1.0 - r0);
  r1 = std::min(r1, 0.4 * dist_point_ray(cplx(1, 0), std::polar(1.0, best_phi)));
  if (d2_segments.size() == 2)
    r1 = std::min(r1, 0.8 * dist_point_segment(cplx(1, 0), d2_segments[1].first,
                                               d2_segments[1].second));
  if (!(r0 > 1e-3 * min_scale) || !(r1 > 1e-3 * min_scale))
    fail(Err::invalid_input, "logarithm family too degenerate to route");

  Path g2;
  g2.pieces.push_back(Piece::circle(cplx(1, 0), r1));
  Path d1;
  d1.pieces.push_back(Piece::circle(cplx(0, 0), r0));
  Path d2;
  for (const auto& [s0, s1] : d2_segments)
    d2.pieces.push_back(Piece::segment(ProjPoint::finite(s0), ProjPoint::finite(s1)));

  fam.gammas = {Chain::single(std::move(g1)), Chain::single(std::move(g2))};
  fam.deltas = {Chain::single(std::move(d1)), Chain::single(std::move(d2))};
  return fam;
}

DoubleCopyReport double_copy_check(const LogForm1& nu, const LogForm1& omega,
                                   const std::vector<Chain>& gammas,
                                   const std::vector<Chain>& deltas, const QuadConfig& cfg) {
  if (gammas.size() != deltas.size() || gammas.empty())
    fail(Err::invalid_input, "cycle bases must be nonempty and of equal size");
  int n = static_cast<int>(gammas.size());
  RatMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = intersection_number(gammas[i], deltas[j]);
  RatMatrix C = dual_pairing_matrix(M);

  DoubleCopyReport rep;
  rep.lhs = integrate_sphere(nu, omega, cfg);

  std::vector<Estimate> Ig(n), Id(n);
  for (int i = 0; i < n; ++i) Ig[i] = integrate_path(nu, gammas[i], cfg);
  for (int j = 0; j < n; ++j) Id[j] = integrate_path(omega, deltas[j].conjugated(), cfg);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& c = C.at(i, j);
      if (c.is_zero()) continue;
      rep.rhs_terms.push_back({c, Ig[i], Id[j]});
      double w = std::abs(c.to_double());
      rep.rhs += c.to_double() * Ig[i].value * Id[j].value;
      rep.rhs_error += w * (std::abs(Ig[i].value) * Id[j].abs_error +
                            Ig[i].abs_error * std::abs(Id[j].value) +
                            Ig[i].abs_error * Id[j].abs_error);
    }
  rep.residual = std::abs(rep.lhs.value - rep.rhs);
  return rep;
}

Estimate sv_mzv(const std::vector<int>& indices, const McConfig& mcfg) {
  LogFormN omega = mzv_omega(indices);
  int n = omega.n;
  LogFormN nu = mzv_nu(n);
  Estimate raw = integrate_mc(nu, omega, mcfg);
  // (-1)^{n(n+1)/2} (2*pi*i)^{-n}, the i-power taken exactly. The parity is
  // the one carried by the canonical form attached to the simplex class; it
  // is pinned numerically by the odd zeta values coming out at +2*zeta(odd).
  cplx unit;
  switch (((n % 4) + 4) % 4) {
    case 0: unit = cplx(1, 0); break;
    case 1: unit = cplx(0, -1); break;
    case 2: unit = cplx(-1, 0); break;
    default: unit = cplx(0, 1); break;
  }
  double sign = ((static_cast<long long>(n) * (n + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  cplx prefactor = sign * unit / std::pow(2 * M_PI, n);
  raw.value *= prefactor;
  raw.abs_error *= std::abs(prefactor);
  return raw;
}

namespace {

// Euler-Maclaurin tail sum_{k > K} k^{-m}.
double zeta_tail(int m, double K) {
  double f = std::pow(K, -m);
  double integral = K * f / (m - 1);
  double d1 = -m * f / K;
  double d3 = -static_cast<double>(m) * (m + 1) * (m + 2) * f / (K * K * K);
  double d5 = d3 * (m + 3) * (m + 4) / (K * K);
  return integral - 0.5 * f - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0;
}

// Euler-Maclaurin tail sum_{k > K} (ln k + g) k^{-m}.
double zeta_log_tail(int m, double g, double K) {
  auto f = [&](double x) { return (std::log(x) + g) * std::pow(x, -m); };
  double L = std::log(K), P = std::pow(K, 1.0 - m);
  double integral = P * ((L + g) / (m - 1) + 1.0 / ((m - 1.0) * (m - 1.0)));
  double f0 = f(K);
  double d1 = std::pow(K, -m - 1) * (1.0 - m * (L + g));
  double mm = m;
  double d3 = std::pow(K, -m - 3) *
              (-mm * (mm + 1) * (mm + 2) * (L + g) + (3 * mm * mm + 6 * mm + 2));
  return integral - 0.5 * f0 - d1 / 12.0 + d3 / 720.0;
}

}  // namespace

double mzv_series(const std::vector<int>& indices, long long terms) {
  if (indices.empty()) fail(Err::divergent_index, "empty index list");
  for (int k : indices)
    if (k < 1) fail(Err::divergent_index, "indices must be >= 1");
  if (indices.back() < 2) fail(Err::divergent_index, "last index must be >= 2");
  size_t r = indices.size();
  if (r == 1) {
    int m = indices[0];
    long long K = terms > 0 ? terms : 64;
    double s = 0;
    for (long long k = 1; k <= K; ++k) s += std::pow(static_cast<double>(k), -m);
    return s + zeta_tail(m, static_cast<double>(K));
  }
  if (r == 2) {
    int n1 = indices[0], n2 = indices[1];
    if (n1 >= 2) {
      // zeta(n1, n2) = zeta(n1) zeta(n2) - sum_k T(k) k^{-n2} - zeta(n1+n2),
      // T(k) = sum_{j > k} j^{-n1}; the subtraction removes the j = k diagonal.
      long long K = terms > 0 ? terms : 4000;
      double s = 0, run = 0;  // run = sum_{j <= k} j^{-n1}
      double z1 = mzv_series({n1});
      for (long long k = 1; k <= K; ++k) {
        run += std::pow(static_cast<double>(k), -n1);
        double Tk = z1 - run;  // sum_{j > k}
        s += Tk * std::pow(static_cast<double>(k), -n2);
      }
      // tail: T(k) ~ zeta_tail, terms decay like k^{1-n1-n2}
      double K2 = static_cast<double>(K);
      int mt = n1 + n2 - 1;
      s += zeta_tail(mt, K2) / (n1 - 1);  // leading asymptotic of the tail
      return z1 * mzv_series({n2}) - s - mzv_series({n1 + n2});
    }
    // n1 = 1: A(k) = H_{k-1}; use H_{k-1} = ln k + g - 1/(2k) - 1/(12k^2) + ...
    long long K = terms > 0 ? terms : 20000;
    const double g = 0.57721566490153286060651209;
    double s = 0, H = 0;
    for (long long k = 1; k <= K; ++k) {
      s += H * std::pow(static_cast<double>(k), -n2);
      H += 1.0 / static_cast<double>(k);
    }
    double K2 = static_cast<double>(K);
    s += zeta_log_tail(n2, g, K2);
    s -= 0.5 * zeta_tail(n2 + 1, K2);
    s -= zeta_tail(n2 + 2, K2) / 12.0;
    return s;
  }
  // depth >= 3: direct prefix sums with an asymptotic tail estimate
  long long K = terms > 0 ? terms : 2000000;
  std::vector<double> prefix(r - 1, 0.0);  // prefix[i] = A_{i+1}(k) during the sweep
  double s = 0;
  for (long long k = 1; k <= K; ++k) {
    double kd = static_cast<double>(k);
    s += prefix[r - 2] * std::pow(kd, -indices[r - 1]);
    for (size_t i = r - 1; i-- > 0;) {
      double inner = i == 0 ? 1.0 : prefix[i - 1];
      prefix[i] += inner * std::pow(kd, -indices[i]);
    }
  }
  s += prefix[r - 2] * zeta_tail(indices[r - 1], static_cast<double>(K));
  return s;
}

double fubini_check(cplx a, cplx b, const QuadConfig& cfg, const McConfig& mcfg,
                    FubiniDetail* detail) {
  for (cplx v : {a, b})
    if (v == cplx(0, 0) || v == cplx(1, 0))
      fail(Err::degenerate_modulus, "parameters must avoid {0, 1, inf}");

  LogForm1 nu_a = c0_dual_path(ProjPoint::finite(cplx(1, 0)), ProjPoint::finite(a));
  LogForm1 nu_b = c0_dual_path(ProjPoint::finite(cplx(1, 0)), ProjPoint::finite(b));
  LogFormN nu2 = wedge({nu_a, nu_b});
  for (auto& t : nu2.terms) t.scalar = -t.scalar;  // (-1)^{n1 n2} with n1 = n2 = 1
  LogFormN om2 = wedge({dlog_z(), dlog_z()});

  Estimate mc = integrate_mc(nu2, om2, mcfg);
  cplx twopii2 = kTwoPiI * kTwoPiI;  // -4 pi^2
  cplx lhs = mc.value / twopii2;
  double lhs_err = mc.abs_error / std::abs(twopii2);

  Estimate ea = sv_log(a, cfg);
  Estimate eb = sv_log(b, cfg);
  cplx product = ea.value * eb.value;
  double perr = std::abs(ea.value) * eb.abs_error + ea.abs_error * std::abs(eb.value) +
                ea.abs_error * eb.abs_error;
  if (detail) {
    detail->product_integral = mc;
    detail->product_integral.value = lhs;
    detail->product_integral.abs_error = lhs_err;
    detail->product = product;
    detail->combined_error = lhs_err + perr;
  }
  return std::abs(lhs - product);
}

Mat mixed_tate_parity(const Mat& s, const std::vector<int>& weights) {
  if (static_cast<int>(weights.size()) != s.rows || s.rows != s.cols)
    fail(Err::invalid_input, "need one half-weight per basis vector");
  Mat out = s;
  for (int i = 0; i < s.rows; ++i) {
    if (weights[i] % 2 == 0) continue;
    for (int j = 0; j < s.cols; ++j) out.at(i, j) = -out.at(i, j);
  }
  return out;
}

}  // namespace svp
