#include "rshe/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace rshe::kernels {

namespace {

Backend select_backend() {
#if defined(RSHE_HAVE_AVX2_TU)
  const char* env = std::getenv("RSHE_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) return Backend::avx2;
  }
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return Backend::avx2;
#endif
  return Backend::scalar;
}

const Backend g_backend = select_backend();

}  // namespace

Backend active_backend() { return g_backend; }

std::string_view backend_name() {
  return g_backend == Backend::avx2 ? "avx2" : "scalar";
}

#if defined(RSHE_HAVE_AVX2_TU)
#define RSHE_DISPATCH(fn, ...) \
  (g_backend == Backend::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define RSHE_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void mul(const double* a, const double* b, double* dst, std::size_t n) {
  RSHE_DISPATCH(mul, a, b, dst, n);
}

void scaled_sum(const double* w, const double* a, const double* b, double* dst,
                std::size_t n) {
  RSHE_DISPATCH(scaled_sum, w, a, b, dst, n);
}

void axpy(double c, const double* a, const double* b, double* dst, std::size_t n) {
  RSHE_DISPATCH(axpy, c, a, b, dst, n);
}

double weighted_sumsq(const double* w, const double* x, std::size_t n) {
  return RSHE_DISPATCH(weighted_sumsq, w, x, n);
}

double weighted_dot(const double* w, const double* x, const double* y,
                    std::size_t n) {
  return RSHE_DISPATCH(weighted_dot, w, x, y, n);
}

double pairwise_sum(const double* x, std::size_t n) {
  return RSHE_DISPATCH(pairwise_sum, x, n);
}

void trig_eval(double c0, const double* ac, const double* as, std::size_t m,
               const double* x, double* out, std::size_t npts) {
  RSHE_DISPATCH(trig_eval, c0, ac, as, m, x, out, npts);
}

}  // namespace rshe::kernels
