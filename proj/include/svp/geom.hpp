#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "svp/error.hpp"
#include "svp/rational.hpp"

namespace svp {

using cplx = std::complex<double>;

/// Point of the projective line: a finite complex number or the point at
/// infinity. Infinity is a tag, never a large coordinate.
struct ProjPoint {
  bool infinite = false;
  cplx z{0.0, 0.0};

  static ProjPoint infinity() { ProjPoint p; p.infinite = true; return p; }
  static ProjPoint finite(cplx w) { ProjPoint p; p.z = w; return p; }
  ProjPoint() = default;
  ProjPoint(cplx w) : z(w) {}  // NOLINT: finite points convert implicitly

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.z == b.z;
  }
};

std::string to_string(const ProjPoint& p);

/// Marked configuration (A, B) on P^1 with A and B disjoint and duplicate-free.
struct Configuration {
  std::vector<ProjPoint> A;
  std::vector<ProjPoint> B;
};

Configuration validate_configuration(const std::vector<ProjPoint>& A,
                                     const std::vector<ProjPoint>& B);

/// One parametrized curve piece. Segments may have one projective endpoint:
/// Segment(p, inf) is the radial ray {p*s : s >= 1} (p != 0), integrated and
/// intersected in the w = 1/z chart; Segment(inf, p) is its reverse. Arcs are
/// circular, counterclockwise iff theta1 > theta0.
struct Piece {
  enum class Kind { segment, arc };
  Kind kind = Kind::segment;
  ProjPoint a, b;        // segment endpoints
  cplx center{0, 0};     // arc data
  double radius = 0, theta0 = 0, theta1 = 0;

  static Piece segment(ProjPoint from, ProjPoint to);
  static Piece arc(cplx center, double radius, double theta0, double theta1);
  /// Full counterclockwise circle.
  static Piece circle(cplx center, double radius);

  ProjPoint start() const;
  ProjPoint end() const;
  Piece reversed() const;
  Piece conjugated() const;
};

struct Path {
  std::vector<Piece> pieces;  // connected end-to-end
  bool is_loop() const;
};

/// Formal rational combination of paths.
struct Chain {
  std::vector<std::pair<Rat, Path>> terms;

  static Chain single(Path p, Rat coeff = Rat(1));
  Chain reversed() const;
  Chain conjugated() const;
};

/// Checks end-to-end connectivity of every path (1e-9 matching tolerance) and
/// that projective endpoints occur only at the outer ends of a path.
void validate_chain(const Chain& c);

/// Sum of coeff * ((end) - (start)) per path; empty for loops.
std::vector<std::pair<Rat, ProjPoint>> boundary(const Chain& c);

/// Signed transverse crossing count. Sign is +1 when (tangent of c1, tangent
/// of c2) is a positively oriented frame of R^2; bilinear over coefficients.
/// Tangencies, endpoint contacts and overlaps within 1e-9 raise
/// NonGenericIntersection.
Rat intersection_number(const Chain& c1, const Chain& c2);

/// Dense rational matrix, row-major.
struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/// (M^T)^{-1} over the rationals, exact. Throws SingularMatrix.
RatMatrix dual_pairing_matrix(const RatMatrix& m);

}  // namespace svp
