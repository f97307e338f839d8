#include <cstdio>
#include "svp/svcore.hpp"
using namespace svp;
int main(){
  QuadConfig cfg;
  McConfig m; m.samples = 10000000; m.seed = 20260810;
  Estimate z3 = sv_mzv({3}, m);
  printf("z3 @1e7: %.6f +- %.6f (im %.6f)  |dev| %.4f vs thresh %.4f\n", z3.value.real(),
         z3.abs_error, z3.value.imag(), std::abs(z3.value.real() - 2*mzv_series({3})),
         std::max(3*z3.abs_error, 0.12));
  Estimate z2 = sv_mzv({2}, m);
  printf("z2 @1e7: %.6f +- %.6f  thresh %.4f\n", z2.value.real(), z2.abs_error,
         std::max(3*z2.abs_error, 0.02));
  McConfig mf; mf.samples = 2000000; mf.seed = 3;
  FubiniDetail det;
  double resid = fubini_check(cplx(2,0), cplx(3,0), cfg, mf, &det);
  printf("fubini(2,3): resid %.6f combined %.6f  product %.6f (= %.6f)  mc %.6f+-%.6f\n",
         resid, det.combined_error, det.product.real(), std::log(4.)*std::log(9.),
         det.product_integral.value.real(), det.product_integral.abs_error);
  return 0;
}
