#pragma once

#include <string>

#include "rshe/fourier.hpp"

// Noise-operator variants: which modes drive the equation and which diagonal
// multiplier dresses the basis functions.
//   truncated(N): e_n for |n| <= N
//   mollified(eps): m_eps(n) e_n on all lattice modes
//   wong_zakai(eps, delta): m_eps(n) e_n with time-mollified increments
//   full: truncated at the solver resolution

namespace rshe {

struct NoiseVariant {
  enum class Kind { truncated, mollified, wong_zakai, full };

  Kind kind = Kind::full;
  int trunc_modes = 0;  // truncated only
  double eps = 0.0;     // mollified / wong_zakai
  double delta = 0.0;   // wong_zakai only

  static NoiseVariant truncated(int n);
  static NoiseVariant mollified(double eps);
  static NoiseVariant wong_zakai(double eps, double delta);
  static NoiseVariant full();

  bool uses_mollifier() const {
    return kind == Kind::mollified || kind == Kind::wong_zakai;
  }
  std::string tag() const;

  // Largest active |n| given solver resolution and lattice resolution.
  int active_modes(int solver_modes, int lattice_modes) const;
  // Diagonal basis multiplier at mode n (1 for truncated/full).
  double basis_multiplier(int n) const;
};

// Projection onto v's modes of <n>^gamma * v * e~_n, with the product formed
// on a zero-padded collocation grid. Out-of-range n (per the variant and
// v's band) yields the zero field.
FourierField rough_diffusion_row(const FourierField& v, int n, double gamma,
                                 const NoiseVariant& variant);

}  // namespace rshe
