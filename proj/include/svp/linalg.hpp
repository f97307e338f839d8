#pragma once

#include <complex>
#include <vector>

#include "svp/error.hpp"

namespace svp {

/// Small dense complex matrix, row-major. Sizes here never exceed a handful.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<std::complex<double>> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const std::complex<double>& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static Mat identity(int n);
  Mat conj() const;
  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator-(const Mat& x, const Mat& y);
};

/// Solves A X = B by partial-pivot elimination. Throws the given error code
/// when A is numerically singular. Also reports a 1-norm condition estimate.
Mat solve(const Mat& A, const Mat& B, Err on_singular, double* cond_out = nullptr);

double max_abs(const Mat& m);

}  // namespace svp
