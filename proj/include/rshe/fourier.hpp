#pragma once

#include <cstdint>
#include <vector>

// Real trigonometric basis on the torus T = R/2piZ, fixed convention:
//   e_0(x)  = (2*pi)^{-1/2}
//   e_n(x)  = pi^{-1/2} * cos(n x)      for n > 0
//   e_{-n}(x) = pi^{-1/2} * sin(n x)    for n > 0
// with eigenvalue weights <n>^2 = 1 + n^2 of 1 - Laplacian.

namespace rshe {

double basis_eval(int n, double x);

// <n>^{2*alpha} = (1 + n^2)^alpha
double mode_weight(int n, double alpha);

// Dense real coefficient vector over modes n in {-N, ..., N}.
struct FourierField {
  int max_mode = 0;
  std::vector<double> coeffs;  // index n + max_mode

  FourierField() : coeffs(1, 0.0) {}
  explicit FourierField(int n_max) : max_mode(n_max), coeffs(2 * n_max + 1, 0.0) {}

  static FourierField basis(int n, int n_max);

  int size() const { return 2 * max_mode + 1; }

  double& at(int n) { return coeffs[static_cast<std::size_t>(n + max_mode)]; }
  double at(int n) const { return coeffs[static_cast<std::size_t>(n + max_mode)]; }

  // zero outside the stored band
  double coeff(int n) const {
    return (n < -max_mode || n > max_mode) ? 0.0 : at(n);
  }

  bool all_finite() const;

  // Pointwise evaluation sum_n coeffs[n] * e_n(x).
  double eval(double x) const;

  // Same coefficients embedded in a band of n_max >= max_mode (zero padding),
  // or truncated to a smaller band.
  FourierField resized(int n_max) const;
};

FourierField operator+(const FourierField& a, const FourierField& b);
FourierField operator-(const FourierField& a, const FourierField& b);
FourierField operator*(double c, const FourierField& f);

// Equispaced point values x_j = 2*pi*j/M, j = 0..M-1.
struct CollocationGrid {
  int size = 0;
  std::vector<double> values;

  CollocationGrid() = default;
  explicit CollocationGrid(int m) : size(m), values(m, 0.0) {}

  double point(int j) const;
};

}  // namespace rshe
