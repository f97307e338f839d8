#include "svp/heights.hpp"

#include <cmath>

namespace svp {

namespace {

constexpr double kMatchTol = 1e-9;

bool same_point(const ProjPoint& p, const ProjPoint& q) {
  if (p.infinite || q.infinite) return p.infinite == q.infinite;
  return std::abs(p.z - q.z) <= kMatchTol;
}

void check_disjoint_supports(const DivisorDeg0& d, const DivisorDeg0& e) {
  for (const auto& [cd, pd] : d.terms)
    for (const auto& [ce, pe] : e.terms)
      if (same_point(pd, pe))
        fail(Err::overlapping_supports, "divisors share the point " + to_string(pd));
}

// conjugate-pole copy: m_i dz/(z - conj(d_i))
LogForm1 conj_pole_form(const DivisorDeg0& d) {
  LogForm1 f;
  for (const auto& [c, p] : d.terms)
    if (!p.infinite) f.terms.push_back({cplx(c.to_double(), 0), std::conj(p.z)});
  return f;
}

}  // namespace

DivisorDeg0 validate_divisor(std::vector<std::pair<Rat, ProjPoint>> terms) {
  Rat total(0);
  for (size_t i = 0; i < terms.size(); ++i) {
    total = total + terms[i].first;
    for (size_t j = i + 1; j < terms.size(); ++j)
      if (same_point(terms[i].second, terms[j].second))
        fail(Err::duplicate_point, "divisor lists " + to_string(terms[i].second) + " twice");
  }
  if (!total.is_zero()) fail(Err::non_zero_degree, "divisor has degree " + to_string(total));
  std::erase_if(terms, [](const auto& t) { return t.first.is_zero(); });
  return DivisorDeg0{std::move(terms)};
}

LogForm1 nu_divisor(const DivisorDeg0& d) {
  Rat total(0);
  for (const auto& [c, p] : d.terms) total = total + c;
  if (!total.is_zero()) fail(Err::non_zero_degree, "divisor has degree " + to_string(total));
  LogForm1 f;
  for (const auto& [c, p] : d.terms)
    if (!p.infinite) f.terms.push_back({cplx(c.to_double(), 0), p.z});
  return f;
}

Estimate height_pairing(const DivisorDeg0& d, const DivisorDeg0& e, const QuadConfig& cfg) {
  check_disjoint_supports(d, e);
  // -(1/2*pi*i) * integral of conj(nu_D) /\ nu_E; pulling back along
  // z -> conj(z) turns it into +(1/2*pi*i) * integral of nu_D^c /\ conj(nu_E^c)
  // with both pole sets conjugated.
  Estimate raw = integrate_sphere(conj_pole_form(d), conj_pole_form(e), cfg);
  Estimate out = raw;
  out.value = raw.value / cplx(0, 2 * M_PI);
  out.abs_error = raw.abs_error / (2 * M_PI);
  return out;
}

double green_closed_form(const DivisorDeg0& d, const DivisorDeg0& e) {
  check_disjoint_supports(d, e);
  double s = 0;
  for (const auto& [m, p] : d.terms) {
    if (p.infinite) continue;
    for (const auto& [n, q] : e.terms) {
      if (q.infinite) continue;
      s += m.to_double() * n.to_double() * std::log(std::norm(p.z - q.z));
    }
  }
  return s;
}

DivisorDeg0 RationalFunction::divisor() const {
  std::vector<std::pair<Rat, ProjPoint>> terms;
  long long degree = 0;
  for (const auto& [mult, z] : zeros) {
    terms.emplace_back(Rat(mult), ProjPoint::finite(z));
    degree += mult;
  }
  for (const auto& [mult, z] : poles) {
    terms.emplace_back(Rat(-mult), ProjPoint::finite(z));
    degree -= mult;
  }
  if (degree != 0) terms.emplace_back(Rat(-degree), ProjPoint::infinity());
  return validate_divisor(std::move(terms));
}

cplx RationalFunction::eval(const ProjPoint& p) const {
  if (p.infinite) {
    long long dz = 0, dp = 0;
    for (const auto& [m, z] : zeros) dz += m;
    for (const auto& [m, z] : poles) dp += m;
    if (dz > dp) fail(Err::invalid_input, "f has a pole at infinity");
    if (dz < dp) return cplx(0, 0);
    return leading;
  }
  cplx v = leading;
  for (const auto& [m, z] : zeros)
    for (int k = 0; k < m; ++k) v *= p.z - z;
  for (const auto& [m, z] : poles)
    for (int k = 0; k < m; ++k) v /= p.z - z;
  return v;
}

double principal_check(const DivisorDeg0& d, const RationalFunction& f, const QuadConfig& cfg) {
  DivisorDeg0 divf = f.divisor();
  if (divf.terms.empty()) return 0.0;  // constant function
  check_disjoint_supports(d, divf);
  double predicted = 0;
  for (const auto& [n, x] : d.terms) {
    cplx v = f.eval(x);
    if (v == cplx(0, 0)) fail(Err::overlapping_supports, "f vanishes on the divisor support");
    predicted += n.to_double() * std::log(std::norm(v));
  }
  Estimate h = height_pairing(d, divf, cfg);
  return std::abs(h.value.real() - predicted);
}

}  // namespace svp
