#include "rshe/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace rshe {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

SpectralTransform::SpectralTransform(int grid_size) : size_(grid_size) {
  if (grid_size < 2) throw std::invalid_argument("SpectralTransform: grid size < 2");
  real_buf_ = fftw_alloc_real(static_cast<std::size_t>(size_));
  cplx_buf_ = fftw_alloc_complex(static_cast<std::size_t>(size_ / 2 + 1));
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_c2r_ = fftw_plan_dft_c2r_1d(size_, static_cast<fftw_complex*>(cplx_buf_),
                                   real_buf_, FFTW_ESTIMATE);
  plan_r2c_ = fftw_plan_dft_r2c_1d(size_, real_buf_,
                                   static_cast<fftw_complex*>(cplx_buf_),
                                   FFTW_ESTIMATE);
}

SpectralTransform::~SpectralTransform() {
  if (plan_c2r_ != nullptr || plan_r2c_ != nullptr) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (plan_c2r_) fftw_destroy_plan(static_cast<fftw_plan>(plan_c2r_));
    if (plan_r2c_) fftw_destroy_plan(static_cast<fftw_plan>(plan_r2c_));
  }
  if (real_buf_) fftw_free(real_buf_);
  if (cplx_buf_) fftw_free(cplx_buf_);
}

SpectralTransform::SpectralTransform(SpectralTransform&& other) noexcept
    : size_(other.size_),
      real_buf_(other.real_buf_),
      cplx_buf_(other.cplx_buf_),
      plan_c2r_(other.plan_c2r_),
      plan_r2c_(other.plan_r2c_) {
  other.real_buf_ = nullptr;
  other.cplx_buf_ = nullptr;
  other.plan_c2r_ = nullptr;
  other.plan_r2c_ = nullptr;
}

void SpectralTransform::synthesize_to(const FourierField& f, double* values) const {
  const int n_max = f.max_mode;
  if (size_ < 2 * n_max + 1)
    throw std::invalid_argument("synthesize: grid size must be >= 2N+1");
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const double half_inv_sqrt_pi = 0.5 / std::sqrt(std::numbers::pi);

  auto* c = static_cast<fftw_complex*>(cplx_buf_);
  const int bins = size_ / 2 + 1;
  for (int k = 0; k < bins; ++k) c[k][0] = c[k][1] = 0.0;
  c[0][0] = f.at(0) * inv_sqrt_2pi;
  for (int k = 1; k <= n_max; ++k) {
    c[k][0] = f.at(k) * half_inv_sqrt_pi;
    c[k][1] = -f.at(-k) * half_inv_sqrt_pi;
  }
  fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_c2r_), c, real_buf_);
  for (int j = 0; j < size_; ++j) values[j] = real_buf_[j];
}

void SpectralTransform::synthesize(const FourierField& f, CollocationGrid& out) const {
  out.size = size_;
  out.values.resize(static_cast<std::size_t>(size_));
  synthesize_to(f, out.values.data());
}

void SpectralTransform::analyze_from(const double* values, FourierField& out) const {
  const int n_max = out.max_mode;
  if (n_max > (size_ - 1) / 2)
    throw std::invalid_argument("analyze: band exceeds (M-1)/2 (aliasing)");
  for (int j = 0; j < size_; ++j) real_buf_[j] = values[j];
  auto* c = static_cast<fftw_complex*>(cplx_buf_);
  fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_r2c_), real_buf_, c);
  const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
  const double two_sqrt_pi = 2.0 * std::sqrt(std::numbers::pi);
  out.at(0) = sqrt_2pi * c[0][0] / size_;
  for (int k = 1; k <= n_max; ++k) {
    out.at(k) = two_sqrt_pi * c[k][0] / size_;
    out.at(-k) = -two_sqrt_pi * c[k][1] / size_;
  }
}

FourierField SpectralTransform::analyze(const CollocationGrid& g, int n_max) const {
  if (g.size != size_)
    throw std::invalid_argument("analyze: grid size mismatch");
  FourierField out(n_max);
  analyze_from(g.values.data(), out);
  return out;
}

CollocationGrid synthesize(const FourierField& f, int grid_size) {
  SpectralTransform t(grid_size);
  CollocationGrid g;
  t.synthesize(f, g);
  return g;
}

FourierField analyze(const CollocationGrid& g, int n_max) {
  SpectralTransform t(g.size);
  return t.analyze(g, n_max);
}

}  // namespace rshe
