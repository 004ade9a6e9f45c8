#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel inner loops used by the spectral solver and the Monte Carlo
// oracles. Every kernel exists as a scalar reference implementation and,
// on x86-64, as an AVX2 variant; the backend is picked once at startup
// (auto-detect, overridable with RSHE_KERNELS=scalar|avx2).
//
// Equivalence contract (see tests/test_kernels.cpp):
//   - elementwise maps (mul, scaled_sum, axpy) are bit-identical across
//     backends (one rounding per output, no FMA contraction),
//   - reductions and trig_eval agree to ~1e-13 relative (association and
//     FMA differ between backends).

namespace rshe::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
std::string_view backend_name();

// dst[i] = a[i] * b[i]
void mul(const double* a, const double* b, double* dst, std::size_t n);

// dst[i] = w[i] * (a[i] + b[i])
void scaled_sum(const double* w, const double* a, const double* b, double* dst,
                std::size_t n);

// dst[i] = c * a[i] + b[i]
void axpy(double c, const double* a, const double* b, double* dst, std::size_t n);

// sum_i w[i] * x[i]^2
double weighted_sumsq(const double* w, const double* x, std::size_t n);

// sum_i w[i] * x[i] * y[i]
double weighted_dot(const double* w, const double* x, const double* y,
                    std::size_t n);

// Cascade (pairwise) summation; the mandated reduction policy for Monte
// Carlo means, so results are independent of worker scheduling.
double pairwise_sum(const double* x, std::size_t n);

// out[p] = c0 + sum_{k=1..m} ( ac[k-1]*cos(k*x[p]) + as[k-1]*sin(k*x[p]) ),
// evaluated with the Chebyshev-style recurrence on (cos x, sin x).
void trig_eval(double c0, const double* ac, const double* as, std::size_t m,
               const double* x, double* out, std::size_t npts);

// Per-backend entry points, exposed so the equivalence tests can pin one
// backend against the other regardless of the runtime selection.
namespace scalar {
void mul(const double* a, const double* b, double* dst, std::size_t n);
void scaled_sum(const double* w, const double* a, const double* b, double* dst,
                std::size_t n);
void axpy(double c, const double* a, const double* b, double* dst, std::size_t n);
double weighted_sumsq(const double* w, const double* x, std::size_t n);
double weighted_dot(const double* w, const double* x, const double* y,
                    std::size_t n);
double pairwise_sum(const double* x, std::size_t n);
void trig_eval(double c0, const double* ac, const double* as, std::size_t m,
               const double* x, double* out, std::size_t npts);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void mul(const double* a, const double* b, double* dst, std::size_t n);
void scaled_sum(const double* w, const double* a, const double* b, double* dst,
                std::size_t n);
void axpy(double c, const double* a, const double* b, double* dst, std::size_t n);
double weighted_sumsq(const double* w, const double* x, std::size_t n);
double weighted_dot(const double* w, const double* x, const double* y,
                    std::size_t n);
double pairwise_sum(const double* x, std::size_t n);
void trig_eval(double c0, const double* ac, const double* as, std::size_t m,
               const double* x, double* out, std::size_t npts);
}  // namespace avx2
#endif

}  // namespace rshe::kernels
