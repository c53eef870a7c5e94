// AVX2 variants of the hot loops. Compiled with -mavx2 -mfma for this file
// only; callers go through the dispatch table and never reach these on
// machines without AVX2.

#include <immintrin.h>

#include <cmath>

#include "walsh/simd.hpp"

namespace walsh::simd {

static void fwht_avx2(double* a, std::size_t n) {
  if (n < 8) {
    scalar_ops().fwht(a, n);
    return;
  }
  // h = 1: butterfly inside each 128-bit pair.
  for (std::size_t i = 0; i < n; i += 4) {
    __m256d x = _mm256_loadu_pd(a + i);
    __m256d y = _mm256_permute_pd(x, 0b0101);   // [a1 a0 a3 a2]
    __m256d add = _mm256_add_pd(x, y);          // [a0+a1 . a2+a3 .]
    __m256d sub = _mm256_sub_pd(y, x);          // [. a0-a1 . a2-a3]
    _mm256_storeu_pd(a + i, _mm256_blend_pd(add, sub, 0b1010));
  }
  // h = 2: butterfly across the two 128-bit halves.
  for (std::size_t i = 0; i < n; i += 4) {
    __m256d x = _mm256_loadu_pd(a + i);
    __m256d y = _mm256_permute2f128_pd(x, x, 0x01);  // [a2 a3 a0 a1]
    __m256d add = _mm256_add_pd(x, y);
    __m256d sub = _mm256_sub_pd(y, x);
    _mm256_storeu_pd(a + i, _mm256_blend_pd(add, sub, 0b1100));
  }
  // h >= 4: whole-vector pairs.
  for (std::size_t h = 4; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; j += 4) {
        __m256d x = _mm256_loadu_pd(a + j);
        __m256d y = _mm256_loadu_pd(a + j + h);
        _mm256_storeu_pd(a + j, _mm256_add_pd(x, y));
        _mm256_storeu_pd(a + j + h, _mm256_sub_pd(x, y));
      }
    }
  }
}

static inline __m256d abs_pd(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

static inline double hsum_pd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

static double abs_pow_sum_avx2(const double* a, std::size_t n, double p) {
  std::size_t i = 0;
  double s = 0.0;
  if (p == 1.0) {
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(a + i)));
    s = hsum_pd(acc);
    for (; i < n; ++i) s += std::fabs(a[i]);
  } else if (p == 2.0) {
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) {
      __m256d x = _mm256_loadu_pd(a + i);
      acc = _mm256_fmadd_pd(x, x, acc);
    }
    s = hsum_pd(acc);
    for (; i < n; ++i) s += a[i] * a[i];
  } else if (p == 0.5) {
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4)
      acc = _mm256_add_pd(acc, _mm256_sqrt_pd(abs_pd(_mm256_loadu_pd(a + i))));
    s = hsum_pd(acc);
    for (; i < n; ++i) s += std::sqrt(std::fabs(a[i]));
  } else {
    // No vector pow worth hand-rolling here.
    return scalar_ops().abs_pow_sum(a, n, p);
  }
  return s;
}

static void abs_max_update_avx2(double* dst, const double* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_loadu_pd(dst + i);
    __m256d v = abs_pd(_mm256_loadu_pd(src + i));
    _mm256_storeu_pd(dst + i, _mm256_max_pd(d, v));
  }
  for (; i < n; ++i) {
    double v = std::fabs(src[i]);
    if (v > dst[i]) dst[i] = v;
  }
}

static void scaled_add_avx2(double* dst, const double* src, double c, std::size_t n) {
  __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_loadu_pd(dst + i);
    __m256d x = _mm256_loadu_pd(src + i);
    _mm256_storeu_pd(dst + i, _mm256_fmadd_pd(x, vc, d));
  }
  for (; i < n; ++i) dst[i] += c * src[i];
}

const Ops& avx2_ops() {
  static const Ops ops{"avx2", fwht_avx2, abs_pow_sum_avx2,
                       abs_max_update_avx2, scaled_add_avx2};
  return ops;
}

}  // namespace walsh::simd
