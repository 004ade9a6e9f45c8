#pragma once

#include <cstddef>
#include <string>

// Diffusion coefficient sigma(u). The smooth registry entries are C-infinity
// with bounded first derivative.

namespace rshe {

struct SigmaSpec {
  enum class Kind { zero, constant, linear, smooth_sin, smooth_sqrt1p };

  Kind kind = Kind::zero;
  double c1 = 0.0;  // constant / linear offset
  double c2 = 0.0;  // linear slope

  static SigmaSpec zero();
  static SigmaSpec constant(double c1);
  static SigmaSpec linear(double c1, double c2);
  static SigmaSpec smooth(const std::string& name);  // "sin" | "sqrt1p"

  // e.g. "zero", "constant:1", "linear:0,1", "sin", "sqrt1p"
  static SigmaSpec parse(const std::string& text);
  std::string tag() const;

  double operator()(double u) const;
  void apply(const double* u, double* out, std::size_t n) const;

  bool constant_in_u() const { return kind == Kind::zero || kind == Kind::constant; }
};

}  // namespace rshe
