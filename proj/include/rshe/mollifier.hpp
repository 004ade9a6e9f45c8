#pragma once

#include <memory>
#include <vector>

// The concrete mollifier: the standard normalized bump
//   rho(x) = c * exp(-1/(1-x^2)) on (-1,1),  c fixed so that its integral
// is 1, scaled as rho_eps(x) = rho(x/eps)/eps. On the torus (eps <= 1)
// convolution with rho_eps acts diagonally on the trigonometric basis:
//   rho_eps * e_n = m_eps(|n|) e_n,  m_eps(n) = \int rho_eps(y) cos(n y) dy.

namespace rshe {

double mollifier_bump(double x);
double mollifier_kernel(double y, double eps);             // rho_eps(y)
double mollifier_kernel_derivative(double y, double eps);  // rho_eps'(y)

// \int_{-1}^{1} rho(x) cos(s x) dx by panel Gauss-Legendre quadrature.
double bump_fourier(double s);

struct Mollifier {
  double eps = 1.0;
  std::vector<double> multipliers;  // index n = 0..table_size()-1

  static Mollifier build(double eps, int n_table);

  int table_size() const { return static_cast<int>(multipliers.size()); }
  double m(int n) const;  // multiplier at |n|; throws beyond the table
};

// ||rho_eps||^2_{H^gamma} truncated at n_sum, with a decay-based tail
// estimate; throws if the estimated tail exceeds 1e-10 relative.
double renorm_constant(double eps, double gamma, int n_sum);

// Process-wide memoized accessors (thread-safe).
std::shared_ptr<const Mollifier> shared_mollifier(double eps, int n_table);
double shared_renorm_constant(double eps, double gamma);

// Fraction of the renormalization constant carried by modes > mode_cut
// (reported by the Feynman-Kac oracle as its truncation tolerance).
double renorm_tail_fraction(double eps, double gamma, int mode_cut);

}  // namespace rshe
