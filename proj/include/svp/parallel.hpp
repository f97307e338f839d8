#pragma once

#include <complex>
#include <cstdlib>
#include <functional>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace svp {

/// Worker count: SVPERIOD_THREADS caps it, OpenMP supplies the default.
inline int worker_threads() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("SVPERIOD_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

/// Evaluates fn(i) for i in [0, count) into a dense vector. The partitioning
/// is fixed ahead of time and results land at fixed indices, so the parallel
/// and serial paths agree bit-for-bit.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t count, Fn&& fn, bool serial) {
  std::vector<T> out(count);
  int threads = serial ? 1 : worker_threads();
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(count); ++i)
    out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
#endif
  return out;
}

/// Fixed pairwise summation tree; independent of thread count.
template <class T>
T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() == 1) return v[0];
  std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

}  // namespace svp
