#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "svp/quad.hpp"

namespace svp::detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (QUADPACK values).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkResult {
  cplx value{0, 0};
  double error = 0;
};

// One Gauss-Kronrod 7/15 panel of a complex-valued function on [a, b].
template <class Fn>
GkResult gk15(Fn&& f, double a, double b) {
  double h = 0.5 * (b - a), c = 0.5 * (a + b);
  cplx fc = f(c);
  cplx resk = kWgk[7] * fc;
  cplx resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  cplx fv[7][2];
  for (int k = 0; k < 7; ++k) {
    fv[k][0] = f(c - h * kXgk[k]);
    fv[k][1] = f(c + h * kXgk[k]);
    cplx s = fv[k][0] + fv[k][1];
    resk += kWgk[k] * s;
    resabs += kWgk[k] * (std::abs(fv[k][0]) + std::abs(fv[k][1]));
    if (k % 2 == 1) resg += kWg[k / 2] * s;
  }
  cplx mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int k = 0; k < 7; ++k)
    resasc += kWgk[k] * (std::abs(fv[k][0] - mean) + std::abs(fv[k][1] - mean));
  resasc *= std::abs(h);
  resabs *= std::abs(h);
  double err = std::abs(resk - resg) * std::abs(h);
  if (resasc != 0 && err != 0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  double tiny = 50.0 * 2.220446049250313e-16 * resabs;
  err = std::max(err, tiny);
  GkResult r;
  r.value = resk * h;
  r.error = err;
  return r;
}

struct Adaptive1dResult {
  cplx value{0, 0};
  double error = 0;
  long long evals = 0;
  int intervals = 0;
};

// Depth-first bisection until every panel meets tol * (local width / span);
// deterministic interval order, summed left to right.
template <class Fn>
Adaptive1dResult adaptive_1d(Fn&& f, double a, double b, double abs_tol, int max_subdivisions,
                             bool* exhausted) {
  Adaptive1dResult out;
  struct Node { double a, b; };
  std::vector<Node> stack{{a, b}};
  double span = b - a;
  int used = 0;
  while (!stack.empty()) {
    Node nd = stack.back();
    stack.pop_back();
    GkResult r = gk15(f, nd.a, nd.b);
    out.evals += 15;
    double local_tol = abs_tol * ((nd.b - nd.a) / span);
    if (r.error <= local_tol || used >= max_subdivisions ||
        (nd.b - nd.a) <= 1e-14 * std::max(std::abs(nd.a), 1.0)) {
      if (r.error > local_tol && used >= max_subdivisions && exhausted) *exhausted = true;
      out.value += r.value;
      out.error += r.error;
      ++out.intervals;
      continue;
    }
    ++used;
    double m = 0.5 * (nd.a + nd.b);
    stack.push_back({m, nd.b});  // left half processed first
    stack.push_back({nd.a, m});
  }
  return out;
}

// Periodic trapezoid with node doubling; f is 2*pi-periodic and smooth, so
// convergence is spectral. Returns the refined value.
template <class Fn>
cplx trapezoid_periodic(Fn&& f, double abs_tol, int n0, int n_max, double* err_out,
                        long long* evals) {
  int n = n0;
  std::vector<cplx> vals(n);
  cplx sum = 0;
  for (int k = 0; k < n; ++k) {
    vals[k] = f(2 * M_PI * k / n);
    sum += vals[k];
  }
  *evals += n;
  cplx prev = sum * (2 * M_PI / n);
  while (n < n_max) {
    std::vector<cplx> next(2 * n);
    for (int k = 0; k < n; ++k) next[2 * k] = vals[k];
    cplx add = 0;
    for (int k = 0; k < n; ++k) {
      next[2 * k + 1] = f(2 * M_PI * (2 * k + 1) / (2 * n));
      add += next[2 * k + 1];
    }
    *evals += n;
    n *= 2;
    vals = std::move(next);
    sum += add;
    cplx cur = sum * (2 * M_PI / n);
    double diff = std::abs(cur - prev);
    prev = cur;
    if (diff <= abs_tol) {
      *err_out = diff;
      return cur;
    }
  }
  *err_out = std::abs(prev) * 1e-3 + abs_tol;  // did not settle; report loosely
  return prev;
}

// Smooth cutoff: 0 for x <= 0, 1 for x >= 1.
inline double smoothstep(double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  double s0 = std::exp(-1.0 / x);
  double s1 = std::exp(-1.0 / (1.0 - x));
  return s0 / (s0 + s1);
}

}  // namespace svp::detail
