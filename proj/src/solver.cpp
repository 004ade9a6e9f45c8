#include "rshe/solver.hpp"

#include <cmath>
#include <numbers>

#include "rshe/kernels.hpp"
#include "rshe/mollifier.hpp"
#include "rshe/spectral.hpp"
#include "rshe/transform.hpp"

namespace rshe {

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);
}  // namespace

InitialCondition InitialCondition::from_field(FourierField f) {
  InitialCondition ic;
  ic.kind = Kind::field;
  ic.field = std::move(f);
  return ic;
}

InitialCondition InitialCondition::dirac(double x0) {
  InitialCondition ic;
  ic.kind = Kind::dirac;
  ic.x0 = x0;
  return ic;
}

InitialCondition InitialCondition::smooth(const std::string& name) {
  if (name != "zero" && name != "one" && name != "cos" && name != "mix")
    throw std::invalid_argument("InitialCondition: unknown smooth profile '" +
                                name + "'");
  InitialCondition ic;
  ic.kind = Kind::smooth;
  ic.name = name;
  return ic;
}

FourierField InitialCondition::coefficients(int n_max) const {
  FourierField out(n_max);
  switch (kind) {
    case Kind::field:
      return field.resized(n_max);
    case Kind::dirac:
      for (int n = -n_max; n <= n_max; ++n) out.at(n) = basis_eval(n, x0);
      return out;
    case Kind::smooth:
      if (name == "one") {
        out.at(0) = kSqrt2Pi;
      } else if (name == "cos") {
        if (n_max >= 1) out.at(1) = kSqrtPi;
      } else if (name == "mix") {
        // 0.5 + cos(x) + 0.3 sin(2x) - 0.2 cos(3x)
        out.at(0) = 0.5 * kSqrt2Pi;
        if (n_max >= 1) out.at(1) = kSqrtPi;
        if (n_max >= 2) out.at(-2) = 0.3 * kSqrtPi;
        if (n_max >= 3) out.at(3) = -0.2 * kSqrtPi;
      }
      return out;
  }
  return out;
}

double InitialCondition::value(double x) const {
  switch (kind) {
    case Kind::field:
      return field.eval(x);
    case Kind::dirac:
      throw std::invalid_argument("InitialCondition: Dirac data has no pointwise values");
    case Kind::smooth:
      if (name == "zero") return 0.0;
      if (name == "one") return 1.0;
      if (name == "cos") return std::cos(x);
      return 0.5 + std::cos(x) + 0.3 * std::sin(2.0 * x) - 0.2 * std::cos(3.0 * x);
  }
  return 0.0;
}

std::string InitialCondition::tag() const {
  switch (kind) {
    case Kind::field:
      return "field";
    case Kind::dirac:
      return "dirac:" + std::to_string(x0);
    case Kind::smooth:
      return "smooth:" + name;
  }
  return "?";
}

int SimConfig::step_count() const {
  return static_cast<int>(std::llround(1.0 / dt));
}

std::vector<std::string> validate_config(const SimConfig& cfg) {
  if (cfg.n_modes < 1) throw std::invalid_argument("SimConfig: n_modes < 1");
  if (cfg.noise_modes < 0) throw std::invalid_argument("SimConfig: noise_modes < 0");
  if (!(cfg.dt > 0.0) || cfg.dt > 1.0)
    throw std::invalid_argument("SimConfig: dt must be in (0, 1]");
  const double k_real = 1.0 / cfg.dt;
  if (std::abs(k_real - std::llround(k_real)) > 1e-9 * k_real)
    throw std::invalid_argument("SimConfig: dt must divide 1 exactly");
  if (!(cfg.gamma >= 0.0) || cfg.gamma >= 0.25)
    throw std::invalid_argument("SimConfig: gamma must be in [0, 1/4)");
  if (cfg.save_stride < 1)
    throw std::invalid_argument("SimConfig: save_stride < 1");
  if (cfg.step_count() % cfg.save_stride != 0)
    throw std::invalid_argument("SimConfig: save_stride must divide the step count");
  if (cfg.variant.kind == NoiseVariant::Kind::full && cfg.noise_modes > cfg.n_modes)
    throw std::invalid_argument("SimConfig: full variant needs noise_modes <= n_modes");

  std::vector<std::string> warnings;
  if (cfg.dt > 0.5 / (static_cast<double>(cfg.n_modes) * cfg.n_modes))
    warnings.push_back("dt exceeds 0.5*N^-2; explicit noise coupling may be inaccurate for the highest modes");
  return warnings;
}

namespace {

struct Workspace {
  int n_modes;
  int active;
  int grid_m;
  SpectralTransform transform;
  std::vector<double> grid_u, grid_sigma, grid_z;
  std::vector<double> z_base;     // <n>^gamma * multiplier, index n + active
  std::vector<double> heat_full;  // exp(-m^2 dt), coefficient layout
  std::vector<double> heat_half;  // exp(-m^2 dt / 2)
  FourierField z_field, increment, half_state, out;
  // Wong-Zakai extras
  bool wz = false;
  double wz_damp = 1.0;  // exp(-1/2 ||rho_eps||^2 dt)
  SmoothedIncrements smoothed;

  Workspace(const SimConfig& cfg, const BrownianLattice& w)
      : n_modes(cfg.n_modes),
        active(cfg.variant.active_modes(cfg.n_modes, w.noise_max_mode)),
        grid_m(4 * cfg.n_modes),
        transform(grid_m),
        grid_u(static_cast<std::size_t>(grid_m)),
        grid_sigma(static_cast<std::size_t>(grid_m)),
        grid_z(static_cast<std::size_t>(grid_m)),
        z_base(static_cast<std::size_t>(2 * active + 1)),
        heat_full(static_cast<std::size_t>(2 * n_modes + 1)),
        heat_half(static_cast<std::size_t>(2 * n_modes + 1)),
        z_field(n_modes),
        increment(n_modes),
        half_state(n_modes),
        out(n_modes) {
    std::shared_ptr<const Mollifier> moll;
    if (cfg.variant.uses_mollifier())
      moll = shared_mollifier(cfg.variant.eps, active);
    for (int n = -active; n <= active; ++n)
      z_base[static_cast<std::size_t>(n + active)] =
          mode_weight(n, cfg.gamma / 2.0) * (moll ? moll->m(n) : 1.0);
    for (int m = -n_modes; m <= n_modes; ++m) {
      const double lam = static_cast<double>(m) * m * cfg.dt;
      heat_full[static_cast<std::size_t>(m + n_modes)] = std::exp(-lam);
      heat_half[static_cast<std::size_t>(m + n_modes)] = std::exp(-lam / 2.0);
    }
    if (cfg.variant.kind == NoiseVariant::Kind::wong_zakai) {
      wz = true;
      wz_damp = std::exp(-0.5 * shared_renorm_constant(cfg.variant.eps, cfg.gamma) *
                         cfg.dt);
      smoothed = time_mollify(w, cfg.variant.delta);
    }
  }

  void advance(const FourierField& state, int k, const BrownianLattice& w,
               const SigmaSpec& sigma, FourierField& result) {
    const std::size_t nc = static_cast<std::size_t>(2 * n_modes + 1);
    if (!wz) {
      transform.synthesize_to(state, grid_u.data());
      sigma.apply(grid_u.data(), grid_sigma.data(), grid_u.size());
      for (int n = -active; n <= active; ++n)
        z_field.at(n) = z_base[static_cast<std::size_t>(n + active)] * w.increment(n, k);
      transform.synthesize_to(z_field, grid_z.data());
      kernels::mul(grid_sigma.data(), grid_z.data(), grid_u.data(), grid_u.size());
      transform.analyze_from(grid_u.data(), increment);
      kernels::scaled_sum(heat_full.data(), state.coeffs.data(),
                          increment.coeffs.data(), result.coeffs.data(), nc);
      return;
    }
    // Strang: half heat, reaction (exact damping + explicit noise), half heat
    kernels::mul(heat_half.data(), state.coeffs.data(), half_state.coeffs.data(), nc);
    transform.synthesize_to(half_state, grid_u.data());
    sigma.apply(grid_u.data(), grid_sigma.data(), grid_u.size());
    for (int n = -active; n <= active; ++n)
      z_field.at(n) =
          z_base[static_cast<std::size_t>(n + active)] * smoothed.increment(n, k);
    transform.synthesize_to(z_field, grid_z.data());
    kernels::mul(grid_sigma.data(), grid_z.data(), grid_u.data(), grid_u.size());
    transform.analyze_from(grid_u.data(), increment);
    kernels::axpy(wz_damp, half_state.coeffs.data(), increment.coeffs.data(),
                  result.coeffs.data(), nc);
    kernels::mul(heat_half.data(), result.coeffs.data(), result.coeffs.data(), nc);
  }
};

void check_lattice_compat(const SimConfig& cfg, const BrownianLattice& w) {
  if (std::abs(w.dt - cfg.dt) > 1e-15)
    throw std::invalid_argument("solve: lattice dt does not match config dt");
  if (w.noise_max_mode < cfg.variant.active_modes(cfg.n_modes, cfg.noise_modes))
    throw std::invalid_argument("solve: lattice has too few noise modes");
  if (cfg.variant.kind == NoiseVariant::Kind::wong_zakai &&
      cfg.variant.delta > w.margin * w.dt + 1e-15)
    throw std::invalid_argument("solve: lattice margin too small for the time mollifier");
}

}  // namespace

FourierField step(const FourierField& state, int k, const BrownianLattice& w,
                  const SimConfig& cfg) {
  if (state.max_mode != cfg.n_modes)
    throw std::invalid_argument("step: state band does not match config");
  if (k < 0 || k >= cfg.step_count())
    throw std::invalid_argument("step: step index out of range");
  check_lattice_compat(cfg, w);
  Workspace ws(cfg, w);
  FourierField result(cfg.n_modes);
  ws.advance(state, k, w, cfg.sigma, result);
  if (!result.all_finite()) throw BlowUpError(k, (k + 1) * cfg.dt);
  return result;
}

Trajectory solve(const SimConfig& cfg, const BrownianLattice& w) {
  validate_config(cfg);
  check_lattice_compat(cfg, w);
  const int k_steps = cfg.step_count();

  Workspace ws(cfg, w);
  Trajectory traj;
  traj.config = cfg;
  traj.noise_seed = w.seed;
  traj.noise_tag = std::to_string(w.seed) + "/" + cfg.variant.tag();
  traj.times.reserve(static_cast<std::size_t>(k_steps / cfg.save_stride) + 1);
  traj.states.reserve(traj.times.capacity());

  FourierField state = cfg.ic.coefficients(cfg.n_modes);
  traj.times.push_back(0.0);
  traj.states.push_back(state);

  FourierField next(cfg.n_modes);
  for (int k = 0; k < k_steps; ++k) {
    ws.advance(state, k, w, cfg.sigma, next);
    std::swap(state, next);
    if (!state.all_finite()) throw BlowUpError(k, (k + 1) * cfg.dt);
    if ((k + 1) % cfg.save_stride == 0) {
      traj.times.push_back((k + 1) * cfg.dt);
      traj.states.push_back(state);
    }
  }
  traj.times.back() = 1.0;
  return traj;
}

double weak_form_residual(const Trajectory& traj, const FourierField& v,
                          double mu, const BrownianLattice& w) {
  const SimConfig& cfg = traj.config;
  const int n_modes = cfg.n_modes;
  for (int n = -v.max_mode; n <= v.max_mode; ++n)
    if (std::abs(n) > n_modes && v.at(n) != 0.0)
      throw std::invalid_argument("weak_form_residual: v has modes beyond the trajectory");

  check_lattice_compat(cfg, w);
  const int active = cfg.variant.active_modes(n_modes, w.noise_max_mode);
  const bool wz = cfg.variant.kind == NoiseVariant::Kind::wong_zakai;
  SmoothedIncrements smoothed;
  double counterterm = 0.0;
  if (wz) {
    smoothed = time_mollify(w, cfg.variant.delta);
    counterterm = shared_renorm_constant(cfg.variant.eps, cfg.gamma);
  }

  // z-coefficient scales <n>^gamma * multiplier
  std::vector<double> z_base(static_cast<std::size_t>(2 * active + 1));
  std::shared_ptr<const Mollifier> moll;
  if (cfg.variant.uses_mollifier()) moll = shared_mollifier(cfg.variant.eps, active);
  for (int n = -active; n <= active; ++n)
    z_base[static_cast<std::size_t>(n + active)] =
        mode_weight(n, cfg.gamma / 2.0) * (moll ? moll->m(n) : 1.0);

  // B v with (Bv)_m = <m>^{2(mu-1)} v_m; pairings (f, v)_{mu-1} = (f, Bv)_{L2}
  FourierField bv(n_modes);
  for (int m = -n_modes; m <= n_modes; ++m)
    bv.at(m) = mode_weight(m, mu - 1.0) * v.coeff(m);

  const int grid_m = 4 * n_modes;
  SpectralTransform transform(grid_m);
  std::vector<double> grid_u(static_cast<std::size_t>(grid_m));
  std::vector<double> grid_sigma(static_cast<std::size_t>(grid_m));
  std::vector<double> grid_bv(static_cast<std::size_t>(grid_m));
  transform.synthesize_to(bv, grid_bv.data());

  const FourierField& psi = traj.initial();
  const double psi_v = pair_alpha(psi, v, mu - 1.0);

  const auto drift_integrand = [&](std::size_t idx) {
    const FourierField& u = traj.states[idx];
    double val = pair_alpha(laplacian(u), v, mu - 1.0);
    if (wz) val -= 0.5 * counterterm * pair_alpha(u, v, mu - 1.0);
    return val;
  };

  double drift = 0.0;
  double noise = 0.0;
  double worst = std::abs(pair_alpha(traj.states[0], v, mu - 1.0) - psi_v);
  double prev_drift_val = drift_integrand(0);

  for (std::size_t idx = 1; idx < traj.states.size(); ++idx) {
    const double h = traj.times[idx] - traj.times[idx - 1];
    const double cur_drift_val = drift_integrand(idx);
    drift += 0.5 * h * (prev_drift_val + cur_drift_val);
    prev_drift_val = cur_drift_val;

    // left-point stochastic sum: coefficients of sigma(u_{t-}) * Bv
    const FourierField& u_prev = traj.states[idx - 1];
    transform.synthesize_to(u_prev, grid_u.data());
    cfg.sigma.apply(grid_u.data(), grid_sigma.data(), grid_u.size());
    kernels::mul(grid_sigma.data(), grid_bv.data(), grid_u.data(), grid_u.size());
    FourierField proj(active);
    transform.analyze_from(grid_u.data(), proj);

    const int k_lo = static_cast<int>(std::llround(traj.times[idx - 1] / cfg.dt));
    const int k_hi = static_cast<int>(std::llround(traj.times[idx] / cfg.dt));
    for (int n = -active; n <= active; ++n) {
      double dw = 0.0;
      for (int k = k_lo; k < k_hi; ++k)
        dw += wz ? smoothed.increment(n, k) : w.increment(n, k);
      noise += z_base[static_cast<std::size_t>(n + active)] * proj.at(n) * dw;
    }

    const double lhs = pair_alpha(traj.states[idx], v, mu - 1.0);
    worst = std::max(worst, std::abs(lhs - psi_v - drift - noise));
  }
  return worst;
}

}  // namespace rshe
