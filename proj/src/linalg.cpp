#include "svp/linalg.hpp"

#include <cmath>

namespace svp {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::conj() const {
  Mat m = *this;
  for (auto& v : m.a) v = std::conj(v);
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  Mat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      std::complex<double> v = x.at(i, k);
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

Mat operator-(const Mat& x, const Mat& y) {
  Mat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

double max_abs(const Mat& m) {
  double v = 0;
  for (const auto& z : m.a) v = std::max(v, std::abs(z));
  return v;
}

namespace {

double norm1(const Mat& m) {
  double best = 0;
  for (int j = 0; j < m.cols; ++j) {
    double s = 0;
    for (int i = 0; i < m.rows; ++i) s += std::abs(m.at(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

Mat solve(const Mat& A, const Mat& B, Err on_singular, double* cond_out) {
  int n = A.rows;
  if (A.cols != n || B.rows != n) fail(Err::invalid_input, "solve: shape mismatch");
  Mat w = A;
  Mat x = B;
  Mat inv = Mat::identity(n);
  double scale = norm1(A);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(w.at(col, col));
    for (int i = col + 1; i < n; ++i)
      if (std::abs(w.at(i, col)) > best) {
        best = std::abs(w.at(i, col));
        piv = i;
      }
    if (!(best > scale * 1e-14) || !std::isfinite(best))
      fail(on_singular, "matrix is numerically singular");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      for (int j = 0; j < x.cols; ++j) std::swap(x.at(piv, j), x.at(col, j));
      for (int j = 0; j < n; ++j) std::swap(inv.at(piv, j), inv.at(col, j));
    }
    std::complex<double> d = w.at(col, col);
    for (int j = 0; j < n; ++j) { w.at(col, j) /= d; inv.at(col, j) /= d; }
    for (int j = 0; j < x.cols; ++j) x.at(col, j) /= d;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      std::complex<double> f = w.at(i, col);
      if (f == std::complex<double>(0, 0)) continue;
      for (int j = 0; j < n; ++j) { w.at(i, j) -= f * w.at(col, j); inv.at(i, j) -= f * inv.at(col, j); }
      for (int j = 0; j < x.cols; ++j) x.at(i, j) -= f * x.at(col, j);
    }
  }
  if (cond_out) *cond_out = scale * norm1(inv);
  return x;
}

}  // namespace svp
