#include <algorithm>
#include <cmath>

#include "quad_detail.hpp"

namespace svp {

namespace {

// Distance from a pole to one piece (in the z chart; rays measured exactly).
double pole_piece_distance(cplx pole, const Piece& pc) {
  if (pc.kind == Piece::Kind::arc) {
    double d = std::abs(pole - pc.center);
    if (pc.theta1 - pc.theta0 >= 2 * M_PI - 1e-12 || pc.theta0 - pc.theta1 >= 2 * M_PI - 1e-12)
      return std::abs(d - pc.radius);
    double th = std::arg(pole - pc.center);
    double lo = std::min(pc.theta0, pc.theta1), hi = std::max(pc.theta0, pc.theta1);
    while (th < lo) th += 2 * M_PI;
    while (th > lo + 2 * M_PI) th -= 2 * M_PI;
    if (th <= hi) return std::abs(d - pc.radius);
    cplx e0 = pc.center + pc.radius * std::polar(1.0, pc.theta0);
    cplx e1 = pc.center + pc.radius * std::polar(1.0, pc.theta1);
    return std::min(std::abs(pole - e0), std::abs(pole - e1));
  }
  // segment or radial ray {anchor * t, t >= 1}
  cplx p, d;
  double lo = 0, hi = 1;
  bool unbounded = false;
  if (!pc.a.infinite && !pc.b.infinite) {
    p = pc.a.z;
    d = pc.b.z - pc.a.z;
  } else {
    p = cplx(0, 0);
    d = pc.a.infinite ? pc.b.z : pc.a.z;
    lo = 1;
    unbounded = true;
  }
  double t = std::real(std::conj(d) * (pole - p)) / std::norm(d);
  t = std::max(t, lo);
  if (!unbounded) t = std::min(t, hi);
  return std::abs(pole - (p + t * d));
}

struct ParamPiece {
  // z(t), z'(t) for t in [0, 1]; projective endpoints approached only in the
  // w = 1/z substitution, never evaluated at the boundary node.
  std::function<cplx(double)> z;
  std::function<cplx(double)> dz;
};

ParamPiece parametrize(const Piece& pc) {
  if (pc.kind == Piece::Kind::arc) {
    cplx c = pc.center;
    double r = pc.radius, t0 = pc.theta0, t1 = pc.theta1;
    return {[c, r, t0, t1](double t) { return c + r * std::polar(1.0, t0 + t * (t1 - t0)); },
            [c, r, t0, t1](double t) {
              return cplx(0, 1) * (t1 - t0) * r * std::polar(1.0, t0 + t * (t1 - t0));
            }};
  }
  if (!pc.a.infinite && !pc.b.infinite) {
    cplx a = pc.a.z, d = pc.b.z - pc.a.z;
    return {[a, d](double t) { return a + t * d; }, [a, d](double) { return d; }};
  }
  if (pc.b.infinite) {
    // z = a / (1 - t), t in [0, 1)
    cplx a = pc.a.z;
    return {[a](double t) { return a / (1.0 - t); },
            [a](double t) { return a / ((1.0 - t) * (1.0 - t)); }};
  }
  // z = b / t, t in (0, 1]
  cplx b = pc.b.z;
  return {[b](double t) { return b / t; }, [b](double t) { return -b / (t * t); }};
}

}  // namespace

Estimate integrate_path(const LogForm1& form, const Chain& path, const QuadConfig& cfg) {
  validate_chain(path);
  bool touches_infinity = false;
  for (const auto& [coeff, p] : path.terms)
    for (const auto& pc : p.pieces)
      touches_infinity |= pc.kind == Piece::Kind::segment && (pc.a.infinite || pc.b.infinite);

  for (const auto& t : form.terms) {
    for (const auto& [coeff, p] : path.terms)
      for (const auto& pc : p.pieces)
        if (pole_piece_distance(t.pole, pc) < cfg.guard_distance)
          fail(Err::pole_on_path, "pole at " + to_string(ProjPoint::finite(t.pole)) +
                                      " within guard distance of the path");
  }
  if (touches_infinity) {
    if (std::abs(residue_coeff(form, ProjPoint::infinity())) > 1e-13 ||
        form.constant != cplx(0, 0))
      fail(Err::pole_on_path, "path ends at infinity where the form has a pole");
  }

  Estimate out;
  out.method = Method::adaptive1d;
  if (form.terms.empty() && form.constant == cplx(0, 0)) return out;

  struct Panel {
    ParamPiece par;
    cplx coeff;
  };
  std::vector<Panel> panels;
  for (const auto& [coeff, p] : path.terms)
    for (const auto& pc : p.pieces)
      panels.push_back({parametrize(pc), cplx(coeff.to_double(), 0)});

  // first pass for the magnitude scale, then refinement to the shared budget
  double scale = 0;
  for (auto& pn : panels) {
    auto integrand = [&](double t) { return form.eval(pn.par.z(t)) * pn.par.dz(t); };
    scale += std::abs(detail::gk15(integrand, 0.0, 1.0).value);
    out.samples_or_evals += 15;
  }
  double tol = cfg.tol_1d() * std::max(scale, 1e-30) / std::max<size_t>(panels.size(), 1);
  bool exhausted = false;
  for (auto& pn : panels) {
    auto integrand = [&](double t) { return form.eval(pn.par.z(t)) * pn.par.dz(t); };
    auto r = detail::adaptive_1d(integrand, 0.0, 1.0, tol, cfg.max_subdivisions, &exhausted);
    out.value += pn.coeff * r.value;
    out.abs_error += std::abs(pn.coeff) * r.error;
    out.samples_or_evals += r.evals;
  }
  if (exhausted) fail(Err::non_convergent, "max_subdivisions exhausted on a path piece");
  return out;
}

}  // namespace svp
