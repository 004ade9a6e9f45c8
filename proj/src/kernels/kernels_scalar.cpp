#include "rshe/kernels.hpp"

#include <cmath>

namespace rshe::kernels::scalar {

void mul(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void scaled_sum(const double* w, const double* a, const double* b, double* dst,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double s = a[i] + b[i];
    dst[i] = w[i] * s;
  }
}

void axpy(double c, const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double p = c * a[i];
    dst[i] = p + b[i];
  }
}

double weighted_sumsq(const double* w, const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * x[i] * x[i];
  return acc;
}

double weighted_dot(const double* w, const double* x, const double* y,
                    std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * x[i] * y[i];
  return acc;
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
  for (std::size_t p = 0; p < npts; ++p) {
    const double c1 = std::cos(x[p]);
    const double s1 = std::sin(x[p]);
    double ck = 1.0, sk = 0.0;  // cos(0), sin(0)
    double acc = c0;
    for (std::size_t k = 0; k < m; ++k) {
      // angle-addition step: (ck,sk) <- (cos((k+1)x), sin((k+1)x))
      const double cn = ck * c1 - sk * s1;
      const double sn = sk * c1 + ck * s1;
      ck = cn;
      sk = sn;
      acc += ac[k] * ck + as[k] * sk;
    }
    out[p] = acc;
  }
}

}  // namespace rshe::kernels::scalar
