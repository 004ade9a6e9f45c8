#include "rshe/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rshe/kernels.hpp"

namespace rshe {

std::vector<double> sobolev_weights(int n_max, double alpha) {
  std::vector<double> w(2 * n_max + 1);
  for (int n = -n_max; n <= n_max; ++n)
    w[static_cast<std::size_t>(n + n_max)] = mode_weight(n, alpha);
  return w;
}

double sobolev_norm(const FourierField& f, double alpha) {
  const std::vector<double> w = sobolev_weights(f.max_mode, alpha);
  return std::sqrt(kernels::weighted_sumsq(w.data(), f.coeffs.data(), w.size()));
}

double pair_alpha(const FourierField& f, const FourierField& g, double alpha) {
  const int band = std::min(f.max_mode, g.max_mode);
  double acc = 0.0;
  for (int n = -band; n <= band; ++n)
    acc += mode_weight(n, alpha) * f.at(n) * g.at(n);
  return acc;
}

FourierField bessel_power(const FourierField& f, double beta) {
  FourierField out(f.max_mode);
  for (int n = -f.max_mode; n <= f.max_mode; ++n)
    out.at(n) = mode_weight(n, beta / 2.0) * f.at(n);
  return out;
}

FourierField laplacian(const FourierField& f) {
  FourierField out(f.max_mode);
  for (int n = -f.max_mode; n <= f.max_mode; ++n)
    out.at(n) = -static_cast<double>(n) * n * f.at(n);
  return out;
}

FourierField multiply_by_mode(const FourierField& f, int m) {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);

  if (m == 0) return (1.0 / sqrt_2pi) * f;

  const int nf = f.max_mode;
  const int mm = std::abs(m);
  const int nb = nf + mm;

  // Raw trigonometric form of f: A[0] + sum_k A[k] cos(kx) + B[k] sin(kx).
  std::vector<double> a_in(nf + 1, 0.0), b_in(nf + 1, 0.0);
  a_in[0] = f.at(0) / sqrt_2pi;
  for (int k = 1; k <= nf; ++k) {
    a_in[static_cast<std::size_t>(k)] = f.at(k) / sqrt_pi;
    b_in[static_cast<std::size_t>(k)] = f.at(-k) / sqrt_pi;
  }

  std::vector<double> a_out(nb + 1, 0.0), b_out(nb + 1, 0.0);
  const double s = 1.0 / sqrt_pi;  // normalization of the multiplying mode

  if (m > 0) {
    // f(x) * s*cos(mm x)
    a_out[static_cast<std::size_t>(mm)] += s * a_in[0];
    for (int k = 1; k <= nf; ++k) {
      const double ha = 0.5 * s * a_in[static_cast<std::size_t>(k)];
      const double hb = 0.5 * s * b_in[static_cast<std::size_t>(k)];
      a_out[static_cast<std::size_t>(k + mm)] += ha;
      b_out[static_cast<std::size_t>(k + mm)] += hb;
      const int j = k - mm;
      if (j > 0) {
        a_out[static_cast<std::size_t>(j)] += ha;
        b_out[static_cast<std::size_t>(j)] += hb;
      } else if (j == 0) {
        a_out[0] += ha;  // cos(0) = 1; sin(0) contributes nothing
      } else {
        a_out[static_cast<std::size_t>(-j)] += ha;
        b_out[static_cast<std::size_t>(-j)] -= hb;
      }
    }
  } else {
    // f(x) * s*sin(mm x)
    b_out[static_cast<std::size_t>(mm)] += s * a_in[0];
    for (int k = 1; k <= nf; ++k) {
      const double ha = 0.5 * s * a_in[static_cast<std::size_t>(k)];
      const double hb = 0.5 * s * b_in[static_cast<std::size_t>(k)];
      b_out[static_cast<std::size_t>(k + mm)] += ha;
      a_out[static_cast<std::size_t>(k + mm)] -= hb;
      const int j = k - mm;
      if (j > 0) {
        b_out[static_cast<std::size_t>(j)] -= ha;
        a_out[static_cast<std::size_t>(j)] += hb;
      } else if (j == 0) {
        a_out[0] += hb;
      } else {
        b_out[static_cast<std::size_t>(-j)] += ha;
        a_out[static_cast<std::size_t>(-j)] += hb;
      }
    }
  }

  FourierField out(nb);
  out.at(0) = a_out[0] * sqrt_2pi;
  for (int j = 1; j <= nb; ++j) {
    out.at(j) = a_out[static_cast<std::size_t>(j)] * sqrt_pi;
    out.at(-j) = b_out[static_cast<std::size_t>(j)] * sqrt_pi;
  }
  return out;
}

double interpolation_constant(double alpha, double beta, double delta, double eps) {
  if (!(alpha < beta && beta < delta))
    throw std::invalid_argument("interpolation_constant: need alpha < beta < delta");
  if (!(eps > 0.0))
    throw std::invalid_argument("interpolation_constant: need eps > 0");
  const double a = beta - alpha;
  const double b = delta - alpha;
  // maximize x^a - eps*x^b: stationary at x* = (a/(eps*b))^{1/(b-a)}
  const double x_star = std::pow(a / (eps * b), 1.0 / (b - a));
  return std::pow(x_star, a) * (1.0 - a / b);
}

}  // namespace rshe
