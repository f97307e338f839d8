#pragma once

#include <string>
#include <vector>

#include "svp/linalg.hpp"
#include "svp/quad.hpp"

namespace svp {

/// Complex period matrix with labeled bases. The twist records an overall
/// (2*pi*i)^{-twist} factor kept symbolic so powers of 2*pi*i never churn
/// through floating point.
struct PeriodMatrix {
  Mat entries;
  Mat entry_errors;  // propagated quadrature bounds, same shape
  std::vector<std::string> row_labels;  // Betti chains
  std::vector<std::string> col_labels;  // de Rham forms
  int twist = 0;
};

struct SvChecks {
  double conj_involution = 0;   // ||S * conj(S) - I||_max
  double involution = 0;        // ||S^2 - I||_max
  double trace_integrality = 0; // |tr S - nearest integer|
  double condition = 0;         // condition estimate of the solve
};

struct SvMatrix {
  Mat entries;
  SvChecks checks;
};

struct DoubleCopyReport {
  Estimate lhs;
  cplx rhs{0, 0};
  struct Term {
    Rat coeff;
    Estimate period1;  // integral of nu over gamma_i
    Estimate period2;  // integral of omega over conjugated delta_j
  };
  std::vector<Term> rhs_terms;
  double residual = 0;
  double rhs_error = 0;  // propagated bound for the quadratic form
};

/// Entry (i, j) = integral of forms[j] along chains[i].
PeriodMatrix period_matrix(const Configuration& config, const std::vector<LogForm1>& forms,
                           const std::vector<Chain>& chains, const QuadConfig& cfg);

/// Single-valued matrix Pbar^{-1} P with the defining-relation residuals
/// populated. For a real embedding pass Pbar = entrywise conjugate of P.
SvMatrix sv_matrix(const PeriodMatrix& P, const PeriodMatrix& Pbar);

/// (2*pi*i)^{-1} * integrate_sphere(nu, omega, cfg).
Estimate sv_pairing(const LogForm1& nu, const LogForm1& omega, const QuadConfig& cfg);

/// Single-valued logarithm log|a|^2 by quadrature; direct_out receives the
/// elementary value 2 ln|a| for cross-checking. Throws DegenerateModulus.
Estimate sv_log(cplx a, const QuadConfig& cfg, double* direct_out = nullptr);

/// Cycle bases for the logarithm family on P^1 \ {0,inf} mod {1,a}:
/// gammas = {path 0 -> inf, loop around 1}, deltas = {loop around 0,
/// path 1 -> a}, routed away from all marked points.
struct LogFamily {
  cplx a;
  LogForm1 nu;     // dlog((z-a)/(z-1))
  LogForm1 omega;  // dz/z
  std::vector<Chain> gammas;
  std::vector<Chain> deltas;
};
LogFamily make_log_family(cplx a);

/// Both sides of the double copy identity
///   integral of nu /\ conj(omega) = sum <gamma_i*, delta_j*>
///       * (integral of nu over gamma_i) * (integral of omega over conj delta_j)
/// with the dual pairing taken as the exact inverse transpose of the
/// intersection matrix of the two bases.
DoubleCopyReport double_copy_check(const LogForm1& nu, const LogForm1& omega,
                                   const std::vector<Chain>& gammas,
                                   const std::vector<Chain>& deltas, const QuadConfig& cfg);

/// Single-valued zeta value via the C^n integral; the real part is the value
/// and the imaginary part rides along in the complex chunk statistics.
Estimate sv_mzv(const std::vector<int>& indices, const McConfig& mcfg);

/// Nested-sum zeta(n_1, ..., n_r) = sum over 0 < k_1 < ... < k_r of
/// prod k_i^{-n_i}, with Euler-Maclaurin/Richardson tail treatment;
/// terms = 0 picks the cutoff adaptively. Throws DivergentIndex.
double mzv_series(const std::vector<int>& indices, long long terms = 0);

struct FubiniDetail {
  Estimate product_integral;  // scaled 2D Monte Carlo value
  cplx product{0, 0};         // sv_log(a) * sv_log(b)
  double combined_error = 0;
};

/// Residual of the product rule: the 2D single-valued pairing of
/// nu_{gamma_a x gamma_b} against (dz/z) /\ (dz/z) versus
/// sv_log(a) * sv_log(b). Throws DegenerateModulus.
double fubini_check(cplx a, cplx b, const QuadConfig& cfg, const McConfig& mcfg,
                    FubiniDetail* detail = nullptr);

/// Graded-parity twist: multiplies row/column blocks of weight 2w by (-1)^w,
/// turning the single-valued involution into its mixed-Tate variant with
/// sv(2*pi*i-class) = +1.
Mat mixed_tate_parity(const Mat& s, const std::vector<int>& weights);

}  // namespace svp
