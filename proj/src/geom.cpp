#include "svp/geom.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace svp {

namespace {

constexpr double kEqTol = 1e-9;
constexpr double kGenericTol = 1e-9;

double cross(cplx u, cplx v) { return std::imag(std::conj(u) * v); }

bool same_point(const ProjPoint& p, const ProjPoint& q) {
  if (p.infinite || q.infinite) return p.infinite == q.infinite;
  return std::abs(p.z - q.z) <= kEqTol;
}

// Directed line piece z(t) = p + t*d for t in [lo, hi] (hi may be +inf for a
// radial ray), traversed forward or backward.
struct LinePrim {
  cplx p, d;
  double lo, hi;
  bool forward;
  bool unbounded;
};

struct ArcPrim {
  cplx c;
  double r, th0, th1;
  bool full() const { return std::abs(std::abs(th1 - th0) - 2 * M_PI) <= 1e-12; }
  double dir() const { return th1 > th0 ? 1.0 : -1.0; }
};

struct Prim {
  bool is_line;
  LinePrim line;
  ArcPrim arc;
};

Prim to_prim(const Piece& pc) {
  Prim pr{};
  if (pc.kind == Piece::Kind::arc) {
    pr.is_line = false;
    pr.arc = ArcPrim{pc.center, pc.radius, pc.theta0, pc.theta1};
    return pr;
  }
  pr.is_line = true;
  if (!pc.a.infinite && !pc.b.infinite) {
    pr.line = LinePrim{pc.a.z, pc.b.z - pc.a.z, 0.0, 1.0, true, false};
  } else if (pc.b.infinite) {
    // radial ray {a * t : t >= 1}
    pr.line = LinePrim{cplx(0, 0), pc.a.z, 1.0, 0.0, true, true};
  } else {
    pr.line = LinePrim{cplx(0, 0), pc.b.z, 1.0, 0.0, false, true};
  }
  return pr;
}

struct Crossing {
  cplx t1, t2;  // tangents of the two pieces at the crossing
};

enum class Hit { outside, boundary, interior };

Hit line_param(const LinePrim& l, double t) {
  double eps = kGenericTol / std::max(std::abs(l.d), 1e-300);
  if (t < l.lo - eps) return Hit::outside;
  if (t < l.lo + eps) return Hit::boundary;
  if (!l.unbounded) {
    if (t > l.hi + eps) return Hit::outside;
    if (t > l.hi - eps) return Hit::boundary;
  }
  return Hit::interior;
}

Hit arc_param(const ArcPrim& a, double theta) {
  if (a.full()) return Hit::interior;
  double lo = std::min(a.th0, a.th1), hi = std::max(a.th0, a.th1);
  double eps = kGenericTol / std::max(a.r, 1e-300);
  double th = theta;
  while (th < lo - eps) th += 2 * M_PI;
  while (th > lo + 2 * M_PI - eps) th -= 2 * M_PI;
  if (th > hi + eps) return Hit::outside;
  if (th > hi - eps || th < lo + eps) return Hit::boundary;
  return Hit::interior;
}

// A contact at a piece boundary is non-generic only when the companion piece
// actually passes through it.
bool combine(Hit a, Hit b) {
  if (a == Hit::outside || b == Hit::outside) return false;
  if (a == Hit::boundary || b == Hit::boundary)
    fail(Err::non_generic_intersection, "crossing at a piece endpoint");
  return true;
}

void intersect_line_line(const LinePrim& u, const LinePrim& v, std::vector<Crossing>& out) {
  double den = cross(u.d, v.d);
  cplx w = v.p - u.p;
  if (std::abs(den) <= kGenericTol * std::abs(u.d) * std::abs(v.d)) {
    // parallel: overlap only if collinear and ranges meet
    if (std::abs(cross(w, u.d)) <= kGenericTol * std::max(std::abs(u.d), 1.0)) {
      double s0 = std::real(std::conj(u.d) * w) / std::norm(u.d);
      double s1 = v.unbounded ? INFINITY : s0 + std::real(std::conj(u.d) * v.d) / std::norm(u.d);
      double a = std::min(s0, s1), b = std::max(s0, s1);
      double lo = u.lo, hi = u.unbounded ? INFINITY : u.hi;
      if (b >= lo - kGenericTol && a <= hi + kGenericTol)
        fail(Err::non_generic_intersection, "overlapping collinear pieces");
    }
    return;
  }
  double s = cross(w, v.d) / den;
  double t = cross(w, u.d) / den;
  if (!combine(line_param(u, s), line_param(v, t))) return;
  out.push_back({u.forward ? u.d : -u.d, v.forward ? v.d : -v.d});
}

void intersect_line_arc(const LinePrim& l, const ArcPrim& a, bool line_first,
                        std::vector<Crossing>& out) {
  // |p + t d - c|^2 = r^2
  double A = std::norm(l.d);
  cplx pc = l.p - a.c;
  double B = 2 * std::real(std::conj(l.d) * pc);
  double C = std::norm(pc) - a.r * a.r;
  double disc = B * B - 4 * A * C;
  if (disc <= 0) {
    // near-tangency only matters if the closest point is on both pieces
    if (disc > -4 * A * (kGenericTol * a.r * 2 + kGenericTol * kGenericTol)) {
      double t = -B / (2 * A);
      bool on_line = t >= l.lo - 1e-6 && (l.unbounded || t <= l.hi + 1e-6);
      if (on_line) fail(Err::non_generic_intersection, "near-tangent line/arc contact");
    }
    return;
  }
  double sq = std::sqrt(disc);
  // half-chord below tolerance counts as a tangency
  if (sq / (2 * A) * std::abs(l.d) < kGenericTol) {
    double t = -B / (2 * A);
    if (line_param(l, t) != Hit::outside)
      fail(Err::non_generic_intersection, "near-tangent line/arc contact");
    return;
  }
  for (double root : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
    cplx z = l.p + root * l.d;
    if (!combine(line_param(l, root), arc_param(a, std::arg(z - a.c)))) continue;
    cplx tl = l.forward ? l.d : -l.d;
    cplx ta = cplx(0, 1) * (z - a.c) * a.dir();
    if (line_first)
      out.push_back({tl, ta});
    else
      out.push_back({ta, tl});
  }
}

void intersect_arc_arc(const ArcPrim& a, const ArcPrim& b, std::vector<Crossing>& out) {
  cplx delta = b.c - a.c;
  double d = std::abs(delta);
  if (d <= kEqTol && std::abs(a.r - b.r) <= kEqTol) {
    fail(Err::non_generic_intersection, "arcs on a common circle");
  }
  if (d >= a.r + b.r + kGenericTol || d <= std::abs(a.r - b.r) - kGenericTol) {
    return;  // disjoint or nested
  }
  if (d > a.r + b.r - kGenericTol || d < std::abs(a.r - b.r) + kGenericTol)
    fail(Err::non_generic_intersection, "near-tangent circles");
  double alpha = (d * d + a.r * a.r - b.r * b.r) / (2 * d);
  double h2 = a.r * a.r - alpha * alpha;
  double h = std::sqrt(std::max(h2, 0.0));
  cplx u = delta / d;
  for (double sgn : {1.0, -1.0}) {
    cplx z = a.c + alpha * u + sgn * h * cplx(0, 1) * u;
    if (!combine(arc_param(a, std::arg(z - a.c)), arc_param(b, std::arg(z - b.c)))) continue;
    out.push_back({cplx(0, 1) * (z - a.c) * a.dir(), cplx(0, 1) * (z - b.c) * b.dir()});
  }
}

int signed_crossings(const Piece& x, const Piece& y) {
  Prim px = to_prim(x), py = to_prim(y);
  std::vector<Crossing> cr;
  if (px.is_line && py.is_line)
    intersect_line_line(px.line, py.line, cr);
  else if (px.is_line && !py.is_line)
    intersect_line_arc(px.line, py.arc, true, cr);
  else if (!px.is_line && py.is_line)
    intersect_line_arc(py.line, px.arc, false, cr);
  else
    intersect_arc_arc(px.arc, py.arc, cr);

  int total = 0;
  for (const auto& c : cr) {
    double s = cross(c.t1, c.t2);
    if (std::abs(s) <= kGenericTol * std::abs(c.t1) * std::abs(c.t2))
      fail(Err::non_generic_intersection, "tangential crossing");
    total += s > 0 ? 1 : -1;
  }
  return total;
}

}  // namespace

std::string to_string(const ProjPoint& p) {
  if (p.infinite) return "inf";
  std::ostringstream os;
  os << p.z.real();
  if (p.z.imag() != 0) os << (p.z.imag() > 0 ? "+" : "") << p.z.imag() << "i";
  return os.str();
}

Configuration validate_configuration(const std::vector<ProjPoint>& A,
                                     const std::vector<ProjPoint>& B) {
  auto no_dup = [](const std::vector<ProjPoint>& v, const char* which) {
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        if (same_point(v[i], v[j]))
          fail(Err::duplicate_point, std::string("duplicate point in ") + which);
  };
  no_dup(A, "A");
  no_dup(B, "B");
  for (const auto& a : A)
    for (const auto& b : B)
      if (same_point(a, b))
        fail(Err::overlapping_divisors, "A and B share the point " + to_string(a));
  return Configuration{A, B};
}

Piece Piece::segment(ProjPoint from, ProjPoint to) {
  if (from.infinite && to.infinite)
    fail(Err::invalid_input, "segment with two projective endpoints");
  if ((from.infinite && std::abs(to.z) <= kEqTol) || (to.infinite && std::abs(from.z) <= kEqTol))
    fail(Err::invalid_input, "radial ray anchored at 0");
  if (!from.infinite && !to.infinite && std::abs(from.z - to.z) <= kEqTol)
    fail(Err::invalid_input, "zero-length segment");
  Piece p;
  p.kind = Kind::segment;
  p.a = from;
  p.b = to;
  return p;
}

Piece Piece::arc(cplx center, double radius, double theta0, double theta1) {
  if (!(radius > 0)) fail(Err::invalid_input, "arc with nonpositive radius");
  if (theta0 == theta1) fail(Err::invalid_input, "zero-length arc");
  if (std::abs(theta1 - theta0) > 2 * M_PI + 1e-12)
    fail(Err::invalid_input, "arc sweeping more than a full turn");
  Piece p;
  p.kind = Kind::arc;
  p.center = center;
  p.radius = radius;
  p.theta0 = theta0;
  p.theta1 = theta1;
  return p;
}

Piece Piece::circle(cplx center, double radius) { return arc(center, radius, 0.0, 2 * M_PI); }

ProjPoint Piece::start() const {
  if (kind == Kind::segment) return a;
  return ProjPoint::finite(center + radius * std::polar(1.0, theta0));
}

ProjPoint Piece::end() const {
  if (kind == Kind::segment) return b;
  return ProjPoint::finite(center + radius * std::polar(1.0, theta1));
}

Piece Piece::reversed() const {
  Piece p = *this;
  if (kind == Kind::segment) {
    std::swap(p.a, p.b);
  } else {
    std::swap(p.theta0, p.theta1);
  }
  return p;
}

Piece Piece::conjugated() const {
  Piece p = *this;
  if (kind == Kind::segment) {
    if (!p.a.infinite) p.a.z = std::conj(p.a.z);
    if (!p.b.infinite) p.b.z = std::conj(p.b.z);
  } else {
    p.center = std::conj(p.center);
    p.theta0 = -theta0;
    p.theta1 = -theta1;
  }
  return p;
}

bool Path::is_loop() const {
  if (pieces.empty()) return false;
  return same_point(pieces.front().start(), pieces.back().end());
}

Chain Chain::single(Path p, Rat coeff) {
  Chain c;
  c.terms.emplace_back(coeff, std::move(p));
  return c;
}

Chain Chain::reversed() const {
  Chain out;
  for (const auto& [coeff, path] : terms) {
    Path rp;
    for (auto it = path.pieces.rbegin(); it != path.pieces.rend(); ++it)
      rp.pieces.push_back(it->reversed());
    out.terms.emplace_back(coeff, std::move(rp));
  }
  return out;
}

Chain Chain::conjugated() const {
  Chain out;
  for (const auto& [coeff, path] : terms) {
    Path cp;
    for (const auto& pc : path.pieces) cp.pieces.push_back(pc.conjugated());
    out.terms.emplace_back(coeff, std::move(cp));
  }
  return out;
}

void validate_chain(const Chain& c) {
  for (const auto& [coeff, path] : c.terms) {
    if (path.pieces.empty()) fail(Err::invalid_input, "empty path in chain");
    for (size_t i = 0; i < path.pieces.size(); ++i) {
      const Piece& pc = path.pieces[i];
      if (pc.kind == Piece::Kind::segment) {
        if (pc.a.infinite && i != 0)
          fail(Err::invalid_input, "projective start allowed only on the first piece");
        if (pc.b.infinite && i + 1 != path.pieces.size())
          fail(Err::invalid_input, "projective end allowed only on the last piece");
      }
      if (i + 1 < path.pieces.size() && !same_point(pc.end(), path.pieces[i + 1].start()))
        fail(Err::invalid_input, "path pieces are not connected end-to-end");
    }
  }
}

std::vector<std::pair<Rat, ProjPoint>> boundary(const Chain& c) {
  validate_chain(c);
  std::vector<std::pair<Rat, ProjPoint>> acc;
  auto add = [&acc](Rat coeff, const ProjPoint& p) {
    for (auto& [r, q] : acc) {
      if (same_point(q, p)) {
        r = r + coeff;
        return;
      }
    }
    acc.emplace_back(coeff, p);
  };
  for (const auto& [coeff, path] : c.terms) {
    if (path.is_loop()) continue;
    add(coeff, path.pieces.back().end());
    add(-coeff, path.pieces.front().start());
  }
  std::erase_if(acc, [](const auto& t) { return t.first.is_zero(); });
  return acc;
}

Rat intersection_number(const Chain& c1, const Chain& c2) {
  validate_chain(c1);
  validate_chain(c2);
  Rat total(0);
  for (const auto& [r1, p1] : c1.terms)
    for (const auto& [r2, p2] : c2.terms) {
      int crossings = 0;
      for (const auto& x : p1.pieces)
        for (const auto& y : p2.pieces) crossings += signed_crossings(x, y);
      total = total + r1 * r2 * Rat(crossings);
    }
  return total;
}

RatMatrix dual_pairing_matrix(const RatMatrix& m) {
  if (m.rows != m.cols) fail(Err::singular_matrix, "dual pairing needs a square matrix");
  int n = m.rows;
  // invert M^T by exact elimination on [M^T | I]
  RatMatrix w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = m.at(j, i);
    w.at(i, n + i) = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!w.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) fail(Err::singular_matrix, "matrix is singular over the rationals");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(w.at(piv, j), w.at(col, j));
    Rat inv = Rat(1) / w.at(col, col);
    for (int j = 0; j < 2 * n; ++j) w.at(col, j) = w.at(col, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || w.at(i, col).is_zero()) continue;
      Rat f = w.at(i, col);
      for (int j = 0; j < 2 * n; ++j) w.at(i, j) = w.at(i, j) - f * w.at(col, j);
    }
  }
  RatMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = w.at(i, n + j);
  return out;
}

}  // namespace svp
