#include "rshe/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rshe/kernels.hpp"
#include "rshe/mollifier.hpp"
#include "rshe/transform.hpp"

namespace rshe {

NoiseVariant NoiseVariant::truncated(int n) {
  if (n < 1) throw std::invalid_argument("NoiseVariant::truncated: need N >= 1");
  NoiseVariant v;
  v.kind = Kind::truncated;
  v.trunc_modes = n;
  return v;
}

NoiseVariant NoiseVariant::mollified(double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("NoiseVariant::mollified: eps must be in (0,1]");
  NoiseVariant v;
  v.kind = Kind::mollified;
  v.eps = eps;
  return v;
}

NoiseVariant NoiseVariant::wong_zakai(double eps, double delta) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("NoiseVariant::wong_zakai: eps must be in (0,1]");
  if (!(delta > 0.0))
    throw std::invalid_argument("NoiseVariant::wong_zakai: delta must be > 0");
  NoiseVariant v;
  v.kind = Kind::wong_zakai;
  v.eps = eps;
  v.delta = delta;
  return v;
}

NoiseVariant NoiseVariant::full() {
  NoiseVariant v;
  v.kind = Kind::full;
  return v;
}

std::string NoiseVariant::tag() const {
  switch (kind) {
    case Kind::truncated:
      return "truncated:" + std::to_string(trunc_modes);
    case Kind::mollified:
      return "mollified:" + std::to_string(eps);
    case Kind::wong_zakai:
      return "wong_zakai:" + std::to_string(eps) + ":" + std::to_string(delta);
    case Kind::full:
      return "full";
  }
  return "?";
}

int NoiseVariant::active_modes(int solver_modes, int lattice_modes) const {
  int a = std::min(solver_modes, lattice_modes);
  if (kind == Kind::truncated) a = std::min(a, trunc_modes);
  return a;
}

double NoiseVariant::basis_multiplier(int n) const {
  if (!uses_mollifier()) return 1.0;
  return shared_mollifier(eps, std::abs(n))->m(n);
}

FourierField rough_diffusion_row(const FourierField& v, int n, double gamma,
                                 const NoiseVariant& variant) {
  const int n_out = v.max_mode;
  FourierField row(n_out);
  const bool active = variant.uses_mollifier() ||
                      std::abs(n) <= (variant.kind == NoiseVariant::Kind::truncated
                                          ? variant.trunc_modes
                                          : n_out);
  if (!active) return row;  // inactive mode

  // exact dealiasing: the product has band v.N + |n|
  const int band = n_out + std::abs(n);
  int m_grid = 2 * band + 2;
  if (m_grid % 2 != 0) ++m_grid;
  m_grid = std::max(m_grid, 8);

  SpectralTransform t(m_grid);
  CollocationGrid gv, gb;
  t.synthesize(v, gv);
  t.synthesize(FourierField::basis(n, std::abs(n)), gb);
  std::vector<double> prod(static_cast<std::size_t>(m_grid));
  kernels::mul(gv.values.data(), gb.values.data(), prod.data(), prod.size());
  FourierField out(n_out);
  t.analyze_from(prod.data(), out);

  const double scale = mode_weight(n, gamma / 2.0) * variant.basis_multiplier(n);
  return scale * out;
}

}  // namespace rshe
