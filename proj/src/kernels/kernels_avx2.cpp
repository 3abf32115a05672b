#include "kernels_avx2.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include "nrange/kernels.hpp"

namespace nrange::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, sh));
}

// reverse lanes of a 4-wide double vector
inline __m256d reverse(__m256d v) { return _mm256_permute4x64_pd(v, 0x1b); }

}  // namespace

double sum(const double* x, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + i));
    a1 = _mm256_add_pd(a1, _mm256_loadu_pd(x + i + 4));
  }
  for (; i + 4 <= n; i += 4) a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + i));
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                         _mm256_loadu_pd(y + i + 4), a1);
  }
  for (; i + 4 <= n; i += 4)
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double dot_reversed(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = reverse(_mm256_loadu_pd(y + n - 4 - i));
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), yv, a0);
  }
  double acc = hsum(a0);
  for (; i < n; ++i) acc += x[i] * y[n - 1 - i];
  return acc;
}

double directional_max(const double* xs, const double* ys, std::size_t n,
                       double c, double s) {
  std::size_t i = 0;
  double best;
  if (n >= 4) {
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sv = _mm256_set1_pd(s);
    __m256d m = _mm256_set1_pd(-__builtin_huge_val());
    for (; i + 4 <= n; i += 4) {
      __m256d v = _mm256_fmadd_pd(cv, _mm256_loadu_pd(xs + i),
                                  _mm256_mul_pd(sv, _mm256_loadu_pd(ys + i)));
      m = _mm256_max_pd(m, v);
    }
    best = hmax(m);
  } else {
    best = c * xs[0] + s * ys[0];
    i = 1;
  }
  for (; i < n; ++i) {
    double v = c * xs[i] + s * ys[i];
    if (v > best) best = v;
  }
  return best;
}

}  // namespace nrange::kernels::avx2

#endif  // __AVX2__ && __FMA__
