#include "rshe/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rshe {

namespace {
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
}  // namespace

double basis_eval(int n, double x) {
  if (n == 0) return kInvSqrt2Pi;
  if (n > 0) return kInvSqrtPi * std::cos(n * x);
  return kInvSqrtPi * std::sin(-n * x);
}

double mode_weight(int n, double alpha) {
  return std::pow(1.0 + static_cast<double>(n) * n, alpha);
}

FourierField FourierField::basis(int n, int n_max) {
  if (n < -n_max || n > n_max)
    throw std::invalid_argument("FourierField::basis: mode outside band");
  FourierField f(n_max);
  f.at(n) = 1.0;
  return f;
}

bool FourierField::all_finite() const {
  for (double c : coeffs)
    if (!std::isfinite(c)) return false;
  return true;
}

double FourierField::eval(double x) const {
  double acc = at(0) * kInvSqrt2Pi;
  for (int n = 1; n <= max_mode; ++n)
    acc += kInvSqrtPi * (at(n) * std::cos(n * x) + at(-n) * std::sin(n * x));
  return acc;
}

FourierField FourierField::resized(int n_max) const {
  FourierField out(n_max);
  const int b = std::min(n_max, max_mode);
  for (int n = -b; n <= b; ++n) out.at(n) = at(n);
  return out;
}

FourierField operator+(const FourierField& a, const FourierField& b) {
  const int n_max = std::max(a.max_mode, b.max_mode);
  FourierField out(n_max);
  for (int n = -n_max; n <= n_max; ++n) out.at(n) = a.coeff(n) + b.coeff(n);
  return out;
}

FourierField operator-(const FourierField& a, const FourierField& b) {
  const int n_max = std::max(a.max_mode, b.max_mode);
  FourierField out(n_max);
  for (int n = -n_max; n <= n_max; ++n) out.at(n) = a.coeff(n) - b.coeff(n);
  return out;
}

FourierField operator*(double c, const FourierField& f) {
  FourierField out(f.max_mode);
  for (int i = 0; i < f.size(); ++i) out.coeffs[i] = c * f.coeffs[i];
  return out;
}

double CollocationGrid::point(int j) const {
  return 2.0 * std::numbers::pi * j / size;
}

}  // namespace rshe
