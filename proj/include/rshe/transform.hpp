#pragma once

#include "rshe/fourier.hpp"

// Grid synthesis/analysis between the real trigonometric basis and
// equispaced point values. Exact transform pair on bandlimited inputs:
// synthesis needs M >= 2N+1, analysis of a band-N field needs N <= (M-1)/2.
//
// Plans are created once per SpectralTransform and reused; plan
// creation/destruction is serialized internally (the planner is not
// thread-safe), execution is not.

namespace rshe {

class SpectralTransform {
 public:
  explicit SpectralTransform(int grid_size);
  ~SpectralTransform();

  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;
  SpectralTransform(SpectralTransform&& other) noexcept;
  SpectralTransform& operator=(SpectralTransform&&) = delete;

  int grid_size() const { return size_; }

  void synthesize(const FourierField& f, CollocationGrid& out) const;
  FourierField analyze(const CollocationGrid& g, int n_max) const;

  // In-place variants on raw grid buffers of length grid_size().
  void synthesize_to(const FourierField& f, double* values) const;
  void analyze_from(const double* values, FourierField& out) const;

 private:
  int size_ = 0;
  double* real_buf_ = nullptr;
  void* cplx_buf_ = nullptr;  // fftw_complex[size_/2 + 1]
  void* plan_c2r_ = nullptr;
  void* plan_r2c_ = nullptr;
};

// One-shot conveniences.
CollocationGrid synthesize(const FourierField& f, int grid_size);
FourierField analyze(const CollocationGrid& g, int n_max);

}  // namespace rshe
