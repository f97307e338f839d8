#include "svp/forms.hpp"

#include <algorithm>
#include <cmath>

namespace svp {

namespace {
constexpr double kPoleTol = 1e-12;
}

cplx LogForm1::eval(cplx z) const {
  cplx v = constant;
  for (const auto& t : terms) {
    cplx d = z - t.pole;
    if (std::abs(d) < kPoleTol) fail(Err::on_singular_locus, "evaluation at a pole");
    v += t.residue / d;
  }
  return v;
}

LogForm1 operator+(const LogForm1& f, const LogForm1& g) {
  LogForm1 out = f;
  out.constant += g.constant;
  for (const auto& t : g.terms) {
    bool merged = false;
    for (auto& u : out.terms)
      if (std::abs(u.pole - t.pole) < kPoleTol) {
        u.residue += t.residue;
        merged = true;
        break;
      }
    if (!merged) out.terms.push_back(t);
  }
  std::erase_if(out.terms, [](const auto& t) { return std::abs(t.residue) == 0.0; });
  return out;
}

LogForm1 operator*(cplx c, const LogForm1& f) {
  LogForm1 out = f;
  out.constant *= c;
  for (auto& t : out.terms) t.residue *= c;
  return out;
}

LogForm1 dlog_z() { return LogForm1{{cplx(1, 0), cplx(0, 0)}}; }

LogForm1 simple_pole(cplx p, cplx residue) { return LogForm1{{residue, p}}; }

cplx residue_coeff(const LogForm1& f, const ProjPoint& p) {
  if (p.infinite) {
    cplx s = 0;
    for (const auto& t : f.terms) s += t.residue;
    return -s;
  }
  for (const auto& t : f.terms)
    if (std::abs(t.pole - p.z) < kPoleTol) return t.residue;
  return 0;
}

LogForm1 c0_dual_path(const ProjPoint& b1, const ProjPoint& b2) {
  if ((b1.infinite && b2.infinite) || (!b1.infinite && !b2.infinite && b1.z == b2.z))
    fail(Err::equal_endpoints, "path class needs distinct endpoints");
  LogForm1 f;
  if (!b1.infinite) f.terms.push_back({cplx(-1, 0), b1.z});
  if (!b2.infinite) f.terms.push_back({cplx(1, 0), b2.z});
  return f;
}

LinFactor LinFactor::minus_const(int i, cplx a) {
  if (i < 1) fail(Err::invalid_input, "coordinate index must be positive");
  LinFactor f;
  f.kind = Kind::coord_minus_const;
  f.i = i;
  f.a = a;
  return f;
}

LinFactor LinFactor::minus_coord(int i, int j, int& sign) {
  if (i == j || i < 1 || j < 1) fail(Err::invalid_input, "coord-coord factor needs i != j >= 1");
  LinFactor f;
  f.kind = Kind::coord_minus_coord;
  sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  f.i = i;
  f.j = j;
  return f;
}

bool operator==(const LinFactor& f, const LinFactor& g) {
  if (f.kind != g.kind || f.i != g.i) return false;
  if (f.kind == LinFactor::Kind::coord_minus_coord) return f.j == g.j;
  return f.a == g.a;
}

bool LinFactor::operator<(const LinFactor& g) const {
  if (kind != g.kind) return kind < g.kind;
  if (i != g.i) return i < g.i;
  if (kind == Kind::coord_minus_coord) return j < g.j;
  if (a.real() != g.a.real()) return a.real() < g.a.real();
  return a.imag() < g.a.imag();
}

void add_term(LogFormN& f, cplx scalar, std::vector<LinFactor> denom) {
  for (const auto& fac : denom) {
    int hi = fac.kind == LinFactor::Kind::coord_minus_coord ? std::max(fac.i, fac.j) : fac.i;
    if (hi > f.n) fail(Err::invalid_input, "factor coordinate exceeds the form dimension");
  }
  std::sort(denom.begin(), denom.end());
  for (size_t k = 1; k < denom.size(); ++k)
    if (denom[k] == denom[k - 1])
      fail(Err::invalid_input, "repeated denominator factor (poles must be simple)");
  f.terms.push_back({scalar, std::move(denom)});
}

LogFormN c0_dual_hypercube(int n) {
  if (n < 1) fail(Err::invalid_input, "hypercube dimension must be >= 1");
  LogFormN f;
  f.n = n;
  f.twopii_pow = -n;
  // 1/(z(1-z)) = -1/(z(z-1)) per coordinate
  double sign = ((n * (n + 1) / 2) % 2 == 0 ? 1.0 : -1.0) * (n % 2 == 0 ? 1.0 : -1.0);
  std::vector<LinFactor> denom;
  for (int i = 1; i <= n; ++i) {
    denom.push_back(LinFactor::minus_const(i, cplx(0, 0)));
    denom.push_back(LinFactor::minus_const(i, cplx(1, 0)));
  }
  add_term(f, cplx(sign, 0), std::move(denom));
  return f;
}

LogFormN mzv_omega(const std::vector<int>& indices) {
  if (indices.empty()) fail(Err::divergent_index, "empty index list");
  for (int ni : indices)
    if (ni < 1) fail(Err::divergent_index, "indices must be >= 1");
  if (indices.back() < 2) fail(Err::divergent_index, "last index must be >= 2");
  int n = 0;
  for (int ni : indices) n += ni;
  LogFormN f;
  f.n = n;
  std::vector<LinFactor> denom;
  int coord = 1;
  for (int ni : indices) {
    denom.push_back(LinFactor::minus_const(coord++, cplx(1, 0)));
    for (int k = 1; k < ni; ++k) denom.push_back(LinFactor::minus_const(coord++, cplx(0, 0)));
  }
  double sign = indices.size() % 2 == 0 ? 1.0 : -1.0;
  add_term(f, cplx(sign, 0), std::move(denom));
  return f;
}

LogFormN mzv_nu(int n) {
  if (n < 1) fail(Err::invalid_input, "dimension must be >= 1");
  LogFormN f;
  f.n = n;
  std::vector<LinFactor> denom;
  double sign = 1.0;
  denom.push_back(LinFactor::minus_const(1, cplx(0, 0)));
  for (int i = 2; i <= n; ++i) {
    int s = 0;
    denom.push_back(LinFactor::minus_coord(i, i - 1, s));  // (t_i - t_{i-1})
    sign *= s;
  }
  denom.push_back(LinFactor::minus_const(n, cplx(1, 0)));
  sign *= -1.0;  // (1 - t_n) = -(t_n - 1)
  add_term(f, cplx(sign, 0), std::move(denom));
  return f;
}

LogFormN wedge(const std::vector<LogForm1>& forms) {
  LogFormN out;
  out.n = static_cast<int>(forms.size());
  if (forms.empty()) fail(Err::invalid_input, "empty wedge");
  std::vector<LogFormN::Term> acc{{cplx(1, 0), {}}};
  for (int i = 1; i <= out.n; ++i) {
    const LogForm1& f = forms[i - 1];
    if (f.constant != cplx(0, 0))
      fail(Err::invalid_input, "constant dz terms cannot enter a product form");
    std::vector<LogFormN::Term> next;
    for (const auto& t : acc)
      for (const auto& s : f.terms) {
        LogFormN::Term u = t;
        u.scalar *= s.residue;
        u.denom.push_back(LinFactor::minus_const(i, s.pole));
        next.push_back(std::move(u));
      }
    acc = std::move(next);
  }
  for (auto& t : acc) add_term(out, t.scalar, std::move(t.denom));
  return out;
}

LogFormN leray_residue(const LogFormN& f, const LinFactor& factor) {
  if (f.n < 1) fail(Err::factor_absent, "residue of a 0-form");
  bool present = false;
  for (const auto& t : f.terms)
    present = present || std::find(t.denom.begin(), t.denom.end(), factor) != t.denom.end();
  if (!present) fail(Err::factor_absent, "factor does not occur in any denominator");

  // The transverse coordinate is z = t_g - a or z = t_g - t_j; coordinate g
  // is removed and the remaining ones keep their order.
  int g = factor.i;
  bool onto_coord = factor.kind == LinFactor::Kind::coord_minus_coord;
  auto relabel = [g](int idx) { return idx > g ? idx - 1 : idx; };

  LogFormN out;
  out.n = f.n - 1;
  out.twopii_pow = f.twopii_pow + 1;

  for (const auto& t : f.terms) {
    auto it = std::find(t.denom.begin(), t.denom.end(), factor);
    if (it == t.denom.end()) continue;
    // moving dz to the front of dt_1 .. dt_n costs (g-1) transpositions
    cplx scalar = t.scalar * ((g - 1) % 2 == 0 ? 1.0 : -1.0);
    std::vector<LinFactor> denom;
    for (const auto& fac : t.denom) {
      if (&fac == &*it) continue;
      LinFactor nf = fac;
      double sgn = 1.0;
      if (fac.kind == LinFactor::Kind::coord_minus_const) {
        if (fac.i == g) {
          if (!onto_coord) {
            cplx c = factor.a - fac.a;  // (t_g - b) -> (a - b)
            if (std::abs(c) < kPoleTol)
              fail(Err::on_singular_locus, "restriction meets another pole divisor");
            scalar /= c;
            continue;
          }
          nf = LinFactor::minus_const(factor.j, fac.a);  // t_g = t_j
        }
      } else if (fac.i == g || fac.j == g) {
        int other = fac.i == g ? fac.j : fac.i;
        if (!onto_coord) {
          // (t_g - t_m) -> -(t_m - a), (t_m - t_g) -> (t_m - a)
          sgn = fac.i == g ? -1.0 : 1.0;
          nf = LinFactor::minus_const(other, factor.a);
        } else {
          int s = 1;  // substitute t_g -> t_j; `other` can never be j here
          nf = fac.i == g ? LinFactor::minus_coord(factor.j, other, s)
                          : LinFactor::minus_coord(other, factor.j, s);
          sgn = s;
        }
      }
      if (nf.kind == LinFactor::Kind::coord_minus_const) {
        nf.i = relabel(nf.i);
      } else {
        int s = 1;
        nf = LinFactor::minus_coord(relabel(nf.i), relabel(nf.j), s);
        sgn *= s;
      }
      scalar *= sgn;
      denom.push_back(nf);
    }
    add_term(out, scalar, std::move(denom));
  }
  return out;
}

cplx eval_form(const LogFormN& f, std::span<const cplx> t) {
  if (static_cast<int>(t.size()) != f.n) fail(Err::invalid_input, "evaluation point dimension");
  cplx total = 0;
  for (const auto& term : f.terms) {
    cplx den = 1;
    for (const auto& fac : term.denom) {
      cplx v = fac.kind == LinFactor::Kind::coord_minus_const ? t[fac.i - 1] - fac.a
                                                              : t[fac.i - 1] - t[fac.j - 1];
      if (std::abs(v) < kPoleTol) fail(Err::on_singular_locus, "evaluation on a pole divisor");
      den *= v;
    }
    total += term.scalar / den;
  }
  if (f.twopii_pow != 0) {
    cplx tp = cplx(0, 2 * M_PI);
    for (int k = 0; k < std::abs(f.twopii_pow); ++k) total = f.twopii_pow > 0 ? total * tp : total / tp;
  }
  return total;
}

cplx as_scalar(const LogFormN& f) {
  if (f.n != 0) fail(Err::invalid_input, "not a 0-form");
  cplx total = 0;
  for (const auto& term : f.terms) total += term.scalar;
  cplx tp = cplx(0, 2 * M_PI);
  for (int k = 0; k < std::abs(f.twopii_pow); ++k) total = f.twopii_pow > 0 ? total * tp : total / tp;
  return total;
}

}  // namespace svp
