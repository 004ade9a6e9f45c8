#include "rshe/feynman_kac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rshe/kernels.hpp"
#include "rshe/mollifier.hpp"
#include "rshe/parallel.hpp"
#include "rshe/rng.hpp"

namespace rshe {

namespace {

struct FieldTables {
  int n_steps = 0;
  int mode_cut = 0;
  std::vector<double> c0;  // constant part per time index
  std::vector<double> ac;  // [i * cut + (k-1)] cos coefficients (pre-normalized)
  std::vector<double> as;  // sin coefficients
};

// F_{s_i} coefficient tables at left points s_i = i*dt_fk, trig_eval layout.
FieldTables build_field_tables(const FkQuery& q, const BrownianLattice& w,
                               int n_steps) {
  FieldTables tab;
  tab.n_steps = n_steps;
  tab.mode_cut = q.mode_cut;
  const std::size_t cut = static_cast<std::size_t>(q.mode_cut);
  tab.c0.assign(static_cast<std::size_t>(n_steps), 0.0);
  tab.ac.assign(static_cast<std::size_t>(n_steps) * cut, 0.0);
  tab.as.assign(static_cast<std::size_t>(n_steps) * cut, 0.0);

  const auto moll = shared_mollifier(q.eps, q.mode_cut);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

  for (int n = -q.mode_cut; n <= q.mode_cut; ++n) {
    const std::vector<double> path = w.mode_path(n);
    const double scale = mode_weight(n, q.gamma / 2.0) * moll->m(n);
    for (int i = 0; i < n_steps; ++i) {
      const double s = i * q.dt_fk;
      const double coeff =
          scale * smoothed_path_derivative(path, w.dt, w.margin, s, q.delta);
      if (n == 0)
        tab.c0[static_cast<std::size_t>(i)] += coeff * inv_sqrt_2pi;
      else if (n > 0)
        tab.ac[static_cast<std::size_t>(i) * cut + static_cast<std::size_t>(n - 1)] =
            coeff * inv_sqrt_pi;
      else
        tab.as[static_cast<std::size_t>(i) * cut + static_cast<std::size_t>(-n - 1)] =
            coeff * inv_sqrt_pi;
    }
  }
  return tab;
}

void validate_query(const FkQuery& q, const BrownianLattice& w, int* n_steps) {
  if (!(q.t > 0.0) || q.t > 1.0)
    throw std::invalid_argument("fk_estimate: t must be in (0, 1]");
  const double steps_real = q.t / q.dt_fk;
  const long long steps = std::llround(steps_real);
  if (steps < 1 || std::abs(steps_real - steps) > 1e-9 * steps_real)
    throw std::invalid_argument("fk_estimate: dt_fk must divide t");
  if (!q.psi.pointwise_evaluable())
    throw std::invalid_argument("fk_estimate: psi must be a bounded function (Dirac excluded)");
  if (q.mode_cut > w.noise_max_mode)
    throw std::invalid_argument("fk_estimate: mode_cut exceeds the lattice band");
  if (q.delta > w.margin * w.dt + 1e-15)
    throw std::invalid_argument("fk_estimate: lattice margin does not cover delta");
  if (q.n_paths < 2) throw std::invalid_argument("fk_estimate: n_paths < 2");
  *n_steps = static_cast<int>(steps);
}

FkEstimate run_paths(const FkQuery& q, const FieldTables& tab, int n_steps) {
  const double counterterm = shared_renorm_constant(q.eps, q.gamma);
  const double walk_scale = std::sqrt(2.0 * q.dt_fk);
  const std::size_t cut = static_cast<std::size_t>(q.mode_cut);
  const double log_damp = -0.5 * counterterm * q.t;

  std::vector<double> values(static_cast<std::size_t>(q.n_paths));
  constexpr int kBlock = 64;
  const int blocks = (q.n_paths + kBlock - 1) / kBlock;

  parallel_for(blocks, [&](int b) {
    const int p_lo = b * kBlock;
    const int p_hi = std::min(q.n_paths, p_lo + kBlock);
    const int count = p_hi - p_lo;
    double pos[kBlock], acc[kBlock], vals[kBlock];
    for (int l = 0; l < count; ++l) {
      pos[l] = q.x;
      acc[l] = 0.0;
    }
    for (int j = 1; j <= n_steps; ++j) {
      for (int l = 0; l < count; ++l)
        pos[l] += walk_scale *
                  rng::gaussian_at(q.seed, j - 1, p_lo + l, rng::kTagWalk);
      // field index t - s reversal: step j sees the field at time index n-j
      const std::size_t i = static_cast<std::size_t>(n_steps - j);
      kernels::trig_eval(tab.c0[i], tab.ac.data() + i * cut, tab.as.data() + i * cut,
                         cut, pos, vals, static_cast<std::size_t>(count));
      for (int l = 0; l < count; ++l) acc[l] += vals[l] * q.dt_fk;
    }
    for (int l = 0; l < count; ++l) {
      const double v = q.psi.value(pos[l]) * std::exp(acc[l] + log_damp);
      if (!std::isfinite(v))
        throw std::runtime_error(
            "fk_estimate: non-finite path functional (delta too small for this path?)");
      values[static_cast<std::size_t>(p_lo + l)] = v;
    }
  });

  FkEstimate est;
  est.n_paths = q.n_paths;
  est.mean = kernels::pairwise_sum(values.data(), values.size()) /
             static_cast<double>(q.n_paths);
  for (double& v : values) {
    const double d = v - est.mean;
    v = d * d;
  }
  const double ssq = kernels::pairwise_sum(values.data(), values.size());
  est.stderr_ = std::sqrt(ssq / (static_cast<double>(q.n_paths) *
                                 (static_cast<double>(q.n_paths) - 1.0)));
  est.tail_fraction = renorm_tail_fraction(q.eps, q.gamma, q.mode_cut);
  return est;
}

}  // namespace

FkEstimate fk_estimate(const FkQuery& query, const BrownianLattice& w) {
  int n_steps = 0;
  validate_query(query, w, &n_steps);
  const FieldTables tab = build_field_tables(query, w, n_steps);
  return run_paths(query, tab, n_steps);
}

std::vector<FkEstimate> fk_grid(const FkQuery& proto,
                                const std::vector<std::pair<double, double>>& points,
                                const BrownianLattice& w) {
  std::vector<FkEstimate> out;
  out.reserve(points.size());
  for (const auto& [t, x] : points) {
    FkQuery q = proto;
    q.t = t;
    q.x = x;
    out.push_back(fk_estimate(q, w));
  }
  return out;
}

}  // namespace rshe
