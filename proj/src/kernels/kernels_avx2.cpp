// AVX2 variants. Elementwise maps use mul/add (no FMA) so they round exactly
// like the scalar reference; reductions use FMA and 4 independent
// accumulators, so they are equivalence-tested with a tolerance instead.

#if defined(__x86_64__) || defined(_M_X64)

#include "rshe/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace rshe::kernels::avx2 {

void mul(const double* a, const double* b, double* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void scaled_sum(const double* w, const double* a, const double* b, double* dst,
                std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s = _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(w + i), s));
  }
  for (; i < n; ++i) {
    const double s = a[i] + b[i];
    dst[i] = w[i] * s;
  }
}

void axpy(double c, const double* a, const double* b, double* dst, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(vc, _mm256_loadu_pd(a + i));
    _mm256_storeu_pd(dst + i, _mm256_add_pd(p, _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) {
    const double p = c * a[i];
    dst[i] = p + b[i];
  }
}

namespace {
inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s  = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}
}  // namespace

double weighted_sumsq(const double* w, const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i), xv), xv, acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += w[i] * x[i] * x[i];
  return hsum(acc) + tail;
}

double weighted_dot(const double* w, const double* x, const double* y,
                    std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i));
    acc = _mm256_fmadd_pd(p, _mm256_loadu_pd(y + i), acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += w[i] * x[i] * y[i];
  return hsum(acc) + tail;
}

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 16) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

void trig_eval(double c0, const double* ac, const double* as, std::size_t m,
               const double* x, double* out, std::size_t npts) {
  std::size_t p = 0;
  for (; p + 4 <= npts; p += 4) {
    alignas(32) double cb[4], sb[4];
    for (int l = 0; l < 4; ++l) {
      cb[l] = std::cos(x[p + l]);
      sb[l] = std::sin(x[p + l]);
    }
    const __m256d c1 = _mm256_load_pd(cb);
    const __m256d s1 = _mm256_load_pd(sb);
    __m256d ck = _mm256_set1_pd(1.0);
    __m256d sk = _mm256_setzero_pd();
    __m256d acc = _mm256_set1_pd(c0);
    for (std::size_t k = 0; k < m; ++k) {
      const __m256d cn = _mm256_fmsub_pd(ck, c1, _mm256_mul_pd(sk, s1));
      const __m256d sn = _mm256_fmadd_pd(sk, c1, _mm256_mul_pd(ck, s1));
      ck = cn;
      sk = sn;
      acc = _mm256_fmadd_pd(_mm256_set1_pd(ac[k]), ck, acc);
      acc = _mm256_fmadd_pd(_mm256_set1_pd(as[k]), sk, acc);
    }
    _mm256_storeu_pd(out + p, acc);
  }
  if (p < npts) scalar::trig_eval(c0, ac, as, m, x + p, out + p, npts - p);
}

}  // namespace rshe::kernels::avx2

#endif  // x86-64
