#include "rshe/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "rshe/feynman_kac.hpp"
#include "rshe/kernels.hpp"
#include "rshe/parallel.hpp"
#include "rshe/rng.hpp"
#include "rshe/spectral.hpp"

namespace rshe {

namespace {

struct ErrorCurves {
  std::vector<double> sup_sq;  // per saved time, ||diff||^2 at alpha_sup
  double int_sq = 0.0;         // trapezoid of ||diff||^2 at alpha_int
};

void check_coupled(const Trajectory& a, const Trajectory& b) {
  if (a.times.size() != b.times.size())
    throw std::invalid_argument("estimate_errors: trajectories have different grids");
  for (std::size_t i = 0; i < a.times.size(); ++i)
    if (std::abs(a.times[i] - b.times[i]) > 1e-12)
      throw std::invalid_argument("estimate_errors: trajectories have different grids");
  if (a.noise_seed != b.noise_seed)
    throw std::invalid_argument(
        "estimate_errors: trajectories are not synchronously coupled (lattice fingerprints differ)");
}

ErrorCurves error_curves(const Trajectory& a, const Trajectory& b, double alpha_sup,
                         double alpha_int) {
  check_coupled(a, b);
  const int band = std::max(a.states[0].max_mode, b.states[0].max_mode);
  const std::vector<double> w_sup = sobolev_weights(band, alpha_sup);
  const std::vector<double> w_int = sobolev_weights(band, alpha_int);

  ErrorCurves out;
  out.sup_sq.resize(a.times.size());
  std::vector<double> diff(static_cast<std::size_t>(2 * band + 1));
  double prev_int = 0.0;
  for (std::size_t i = 0; i < a.times.size(); ++i) {
    for (int n = -band; n <= band; ++n)
      diff[static_cast<std::size_t>(n + band)] =
          a.states[i].coeff(n) - b.states[i].coeff(n);
    out.sup_sq[i] = kernels::weighted_sumsq(w_sup.data(), diff.data(), diff.size());
    const double cur_int =
        kernels::weighted_sumsq(w_int.data(), diff.data(), diff.size());
    if (i > 0)
      out.int_sq += 0.5 * (a.times[i] - a.times[i - 1]) * (prev_int + cur_int);
    prev_int = cur_int;
  }
  return out;
}

double mean_of(const std::vector<double>& xs) {
  return kernels::pairwise_sum(xs.data(), xs.size()) / static_cast<double>(xs.size());
}

double stderr_of(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ssq = 0.0;
  for (double x : xs) ssq += (x - mean) * (x - mean);
  return std::sqrt(ssq / (static_cast<double>(xs.size()) *
                          (static_cast<double>(xs.size()) - 1.0)));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::pair<double, double> estimate_errors(const Trajectory& a, const Trajectory& b,
                                          double mu) {
  const ErrorCurves c = error_curves(a, b, mu - 1.0, mu);
  const double sup = *std::max_element(c.sup_sq.begin(), c.sup_sq.end());
  return {sup, c.int_sq};
}

ConvergenceReport run_convergence(const ExperimentConfig& cfg) {
  const bool spectral = cfg.kind == ExperimentKind::spectral;
  if (!spectral && cfg.kind != ExperimentKind::mollify)
    throw std::invalid_argument("run_convergence: spectral or mollify only");
  if (cfg.levels.empty()) throw std::invalid_argument("run_convergence: no levels");
  for (std::size_t i = 1; i < cfg.levels.size(); ++i) {
    const bool ordered = spectral ? cfg.levels[i] > cfg.levels[i - 1]
                                  : cfg.levels[i] < cfg.levels[i - 1];
    if (!ordered)
      throw std::invalid_argument(
          "run_convergence: levels must be strictly ordered (N ascending / eps descending)");
  }
  if (spectral) {
    for (double lv : cfg.levels)
      if (lv >= cfg.reference_modes)
        throw std::invalid_argument("run_convergence: reference must be finer than all levels");
  } else {
    for (double lv : cfg.levels)
      if (!(lv > 0.0) || lv > 1.0)
        throw std::invalid_argument("run_convergence: eps levels must be in (0, 1]");
  }
  const double gamma = cfg.base.gamma;
  if (!(cfg.mu > gamma) || !(cfg.mu < 0.5 - gamma))
    throw std::invalid_argument("run_convergence: mu must be in (gamma, 1/2 - gamma)");
  if (!(cfg.kappa_target > 0.0) || !(cfg.kappa_target < 0.5 - gamma - cfg.mu))
    throw std::invalid_argument(
        "run_convergence: kappa_target must be in (0, 1/2 - gamma - mu)");
  if (cfg.replicas < 2) throw std::invalid_argument("run_convergence: replicas < 2");

  const int n_levels = static_cast<int>(cfg.levels.size());
  const int n_ref = cfg.reference_modes;

  struct ReplicaResult {
    std::vector<std::vector<double>> sup_curves;  // per level
    std::vector<double> int_sq;
    std::vector<char> aborted;
  };
  std::vector<ReplicaResult> results(static_cast<std::size_t>(cfg.replicas));

  parallel_for(cfg.replicas, [&](int r) {
    ReplicaResult& res = results[static_cast<std::size_t>(r)];
    res.sup_curves.resize(static_cast<std::size_t>(n_levels));
    res.int_sq.assign(static_cast<std::size_t>(n_levels), 0.0);
    res.aborted.assign(static_cast<std::size_t>(n_levels), 0);

    const std::uint64_t seed_r =
        rng::derive_stream(cfg.master_seed, static_cast<std::uint64_t>(r));
    const BrownianLattice lattice =
        BrownianLattice::sample(seed_r, n_ref, cfg.base.dt, 0);

    SimConfig ref_cfg = cfg.base;
    ref_cfg.n_modes = n_ref;
    ref_cfg.noise_modes = n_ref;
    ref_cfg.variant = NoiseVariant::truncated(n_ref);
    ref_cfg.seed = seed_r;
    const Trajectory ref = solve(ref_cfg, lattice);

    for (int l = 0; l < n_levels; ++l) {
      SimConfig lv_cfg = ref_cfg;
      if (spectral) {
        const int n_level = static_cast<int>(cfg.levels[static_cast<std::size_t>(l)]);
        lv_cfg.n_modes = n_level;
        lv_cfg.variant = NoiseVariant::truncated(n_level);
      } else {
        lv_cfg.variant =
            NoiseVariant::mollified(cfg.levels[static_cast<std::size_t>(l)]);
      }
      try {
        const Trajectory level = solve(lv_cfg, lattice);
        const ErrorCurves curves = error_curves(ref, level, cfg.mu - 1.0, cfg.mu);
        res.sup_curves[static_cast<std::size_t>(l)] = curves.sup_sq;
        res.int_sq[static_cast<std::size_t>(l)] = curves.int_sq;
      } catch (const BlowUpError&) {
        res.aborted[static_cast<std::size_t>(l)] = 1;
      }
    }
  });

  ConvergenceReport report;
  int total_aborts = 0;
  std::vector<std::size_t> argmax(static_cast<std::size_t>(n_levels), 0);
  std::vector<std::vector<double>> sup_at_argmax(static_cast<std::size_t>(n_levels));

  for (int l = 0; l < n_levels; ++l) {
    std::vector<double> curve;
    std::vector<double> ints;
    int aborted = 0;
    for (const ReplicaResult& res : results) {
      if (res.aborted[static_cast<std::size_t>(l)]) {
        ++aborted;
        continue;
      }
      const std::vector<double>& sup = res.sup_curves[static_cast<std::size_t>(l)];
      if (curve.empty()) curve.assign(sup.size(), 0.0);
      for (std::size_t i = 0; i < sup.size(); ++i) curve[i] += sup[i];
      ints.push_back(res.int_sq[static_cast<std::size_t>(l)]);
    }
    total_aborts += aborted;
    const int valid = cfg.replicas - aborted;
    if (valid < 2)
      throw std::runtime_error("run_convergence: too many aborted replicas at a level");
    for (double& c : curve) c /= valid;

    const std::size_t t_star = static_cast<std::size_t>(
        std::max_element(curve.begin(), curve.end()) - curve.begin());
    argmax[static_cast<std::size_t>(l)] = t_star;

    std::vector<double>& at_star = sup_at_argmax[static_cast<std::size_t>(l)];
    for (const ReplicaResult& res : results)
      if (!res.aborted[static_cast<std::size_t>(l)])
        at_star.push_back(res.sup_curves[static_cast<std::size_t>(l)][t_star]);

    ErrorRow row;
    row.kind = spectral ? "spectral" : "mollify";
    row.h = cfg.levels[static_cast<std::size_t>(l)];
    row.e_sup = curve[t_star];
    row.e_sup_stderr = stderr_of(at_star, row.e_sup);
    row.e_int = mean_of(ints);
    row.e_int_stderr = stderr_of(ints, row.e_int);
    row.replicas = valid;
    row.aborted = aborted;
    report.rows.push_back(row);
  }

  if (total_aborts * 100 > cfg.replicas * n_levels)
    throw std::runtime_error("run_convergence: more than 1% of replica solves aborted");

  // paired separation between consecutive levels: coarse error minus fine
  // error per replica, each at its own argmax time
  // levels are ordered coarse -> fine in both conventions
  for (int l = 0; l + 1 < n_levels; ++l) {
    const int coarse = l;
    const int fine = coarse + 1;
    std::vector<double> diffs;
    for (const ReplicaResult& res : results) {
      if (res.aborted[static_cast<std::size_t>(coarse)] ||
          res.aborted[static_cast<std::size_t>(fine)])
        continue;
      diffs.push_back(
          res.sup_curves[static_cast<std::size_t>(coarse)][argmax[static_cast<std::size_t>(coarse)]] -
          res.sup_curves[static_cast<std::size_t>(fine)][argmax[static_cast<std::size_t>(fine)]]);
    }
    const double m = mean_of(diffs);
    const double se = stderr_of(diffs, m);
    report.sup_separation_z.push_back(se > 0.0 ? m / se : 0.0);
  }
  return report;
}

RateFit fit_rate(const std::vector<ErrorRow>& rows) {
  if (rows.size() < 3) throw std::invalid_argument("fit_rate: need at least 3 rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double n = static_cast<double>(rows.size());
  for (const ErrorRow& row : rows) {
    if (!(row.e_sup > 0.0) || !(row.h > 0.0))
      throw std::invalid_argument("fit_rate: errors and levels must be positive");
    const double lx = std::log(row.h);
    const double ly = std::log(row.e_sup);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  RateFit fit;
  const double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (const ErrorRow& row : rows) {
    const double pred = fit.intercept + fit.slope * std::log(row.h);
    const double resid = std::log(row.e_sup) - pred;
    ss_res += resid * resid;
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

WongZakaiReport run_wong_zakai(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::wong_zakai)
    throw std::invalid_argument("run_wong_zakai: wrong experiment kind");
  if (cfg.levels.empty()) throw std::invalid_argument("run_wong_zakai: no eps levels");
  for (std::size_t i = 0; i < cfg.levels.size(); ++i) {
    if (!(cfg.levels[i] > 0.0) || cfg.levels[i] > 1.0)
      throw std::invalid_argument("run_wong_zakai: eps levels must be in (0, 1]");
    if (i > 0 && !(cfg.levels[i] < cfg.levels[i - 1]))
      throw std::invalid_argument("run_wong_zakai: eps levels must be strictly decreasing");
  }
  if (!(cfg.wz_exponent_a > 0.0))
    throw std::invalid_argument("run_wong_zakai: A must be positive");

  const int n_levels = static_cast<int>(cfg.levels.size());
  const int n_modes = cfg.reference_modes;
  std::vector<double> deltas;
  double max_delta = 0.0;
  for (double eps : cfg.levels) {
    deltas.push_back(std::pow(eps, cfg.wz_exponent_a));
    max_delta = std::max(max_delta, deltas.back());
  }
  const int margin = static_cast<int>(std::ceil(max_delta / cfg.base.dt)) + 1;

  struct ReplicaResult {
    std::vector<double> distance;   // sqrt(int L2^2)
    std::vector<double> sup_sq;     // sup_t ||.||^2_{L2}
    std::vector<double> int_sq;
  };
  std::vector<ReplicaResult> results(static_cast<std::size_t>(cfg.replicas));

  parallel_for(cfg.replicas, [&](int r) {
    ReplicaResult& res = results[static_cast<std::size_t>(r)];
    const std::uint64_t seed_r =
        rng::derive_stream(cfg.master_seed, static_cast<std::uint64_t>(r));
    const BrownianLattice lattice =
        BrownianLattice::sample(seed_r, n_modes, cfg.base.dt, margin);
    for (int l = 0; l < n_levels; ++l) {
      const double eps = cfg.levels[static_cast<std::size_t>(l)];
      SimConfig ito_cfg = cfg.base;
      ito_cfg.n_modes = n_modes;
      ito_cfg.noise_modes = n_modes;
      ito_cfg.seed = seed_r;
      ito_cfg.variant = NoiseVariant::mollified(eps);
      SimConfig wz_cfg = ito_cfg;
      wz_cfg.variant =
          NoiseVariant::wong_zakai(eps, deltas[static_cast<std::size_t>(l)]);
      const Trajectory ito = solve(ito_cfg, lattice);
      const Trajectory wz = solve(wz_cfg, lattice);
      const ErrorCurves curves = error_curves(ito, wz, 0.0, 0.0);
      res.sup_sq.push_back(*std::max_element(curves.sup_sq.begin(), curves.sup_sq.end()));
      res.int_sq.push_back(curves.int_sq);
      res.distance.push_back(std::sqrt(curves.int_sq));
    }
  });

  WongZakaiReport report;
  report.replicas = cfg.replicas;
  for (int l = 0; l < n_levels; ++l) {
    std::vector<double> sups, ints, dists;
    for (const ReplicaResult& res : results) {
      sups.push_back(res.sup_sq[static_cast<std::size_t>(l)]);
      ints.push_back(res.int_sq[static_cast<std::size_t>(l)]);
      dists.push_back(res.distance[static_cast<std::size_t>(l)]);
    }
    ErrorRow row;
    row.kind = "wong-zakai";
    row.h = cfg.levels[static_cast<std::size_t>(l)];
    row.e_sup = mean_of(sups);
    row.e_sup_stderr = stderr_of(sups, row.e_sup);
    row.e_int = mean_of(ints);
    row.e_int_stderr = stderr_of(ints, row.e_int);
    row.replicas = cfg.replicas;
    row.aborted = 0;
    report.rows.push_back(row);
    report.mean_distance.push_back(mean_of(dists));
  }
  for (const ReplicaResult& res : results) {
    bool monotone = true;
    for (int l = 0; l + 1 < n_levels; ++l)
      if (!(res.distance[static_cast<std::size_t>(l + 1)] <
            res.distance[static_cast<std::size_t>(l)]))
        monotone = false;
    if (monotone) ++report.monotone_replicas;
  }
  report.notes.push_back(
      "delta = eps^A with A = " + format_double(cfg.wz_exponent_a) +
      "; far below the scale separation the pathwise theory asks for, so this run "
      "is a trend check, not a rate measurement");

  if (cfg.fk_checks) {
    const std::uint64_t seed_0 = rng::derive_stream(cfg.master_seed, 0);
    const BrownianLattice lattice =
        BrownianLattice::sample(seed_0, n_modes, cfg.base.dt, margin);
    const std::vector<std::pair<double, double>> points = {
        {0.25, 0.7}, {0.5, 2.1}, {0.75, 4.0}, {1.0, 5.5}, {0.5, 3.3}};
    for (int l = 0; l < n_levels; ++l) {
      const double eps = cfg.levels[static_cast<std::size_t>(l)];
      SimConfig wz_cfg = cfg.base;
      wz_cfg.n_modes = n_modes;
      wz_cfg.noise_modes = n_modes;
      wz_cfg.seed = seed_0;
      wz_cfg.variant =
          NoiseVariant::wong_zakai(eps, deltas[static_cast<std::size_t>(l)]);
      const Trajectory wz = solve(wz_cfg, lattice);

      FkQuery proto;
      proto.eps = eps;
      proto.delta = deltas[static_cast<std::size_t>(l)];
      proto.gamma = cfg.base.gamma;
      proto.psi = cfg.base.ic;
      proto.n_paths = cfg.fk_paths;
      proto.dt_fk = cfg.fk_dt;
      proto.mode_cut = n_modes;
      proto.seed = rng::derive_stream(cfg.master_seed, 0xFEED);
      const std::vector<FkEstimate> est = fk_grid(proto, points, lattice);

      for (std::size_t i = 0; i < points.size(); ++i) {
        WongZakaiReport::FkRow fk_row;
        fk_row.t = points[i].first;
        fk_row.x = points[i].second;
        // saved grid contains t (stride divides the step count)
        const double t = points[i].first;
        std::size_t idx = 0;
        for (std::size_t j = 0; j < wz.times.size(); ++j)
          if (std::abs(wz.times[j] - t) < 1e-12) idx = j;
        fk_row.solver_value = wz.states[idx].eval(points[i].second);
        fk_row.fk_mean = est[i].mean;
        fk_row.fk_stderr = est[i].stderr_;
        fk_row.tolerance = 3.0 * (est[i].stderr_ + 2.0 * cfg.base.dt);
        fk_row.pass = std::abs(fk_row.solver_value - fk_row.fk_mean) <= fk_row.tolerance;
        report.fk_rows.push_back(fk_row);
      }
    }
  }
  return report;
}

std::string csv_text(const std::vector<ErrorRow>& rows, std::uint64_t seed) {
  std::string out = "# rshe ";
  out += kVersion;
  out += "\nkind,h,E_sup,E_sup_stderr,E_int,E_int_stderr,replicas,aborted,seed,version\n";
  for (const ErrorRow& row : rows) {
    out += row.kind + "," + format_double(row.h) + "," + format_double(row.e_sup) +
           "," + format_double(row.e_sup_stderr) + "," + format_double(row.e_int) +
           "," + format_double(row.e_int_stderr) + "," + std::to_string(row.replicas) +
           "," + std::to_string(row.aborted) + "," + std::to_string(seed) + "," +
           kVersion + "\n";
  }
  return out;
}

void write_csv(const std::vector<ErrorRow>& rows, std::uint64_t seed,
               const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("write_csv: cannot open '" + path + "'");
  file << csv_text(rows, seed);
}

void dump_trajectory(const Trajectory& traj, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("dump_trajectory: cannot open '" + path + "'");
  file.write("RSHE1", 5);
  const std::uint32_t header[3] = {
      static_cast<std::uint32_t>(traj.config.n_modes),
      static_cast<std::uint32_t>(traj.config.step_count()),
      static_cast<std::uint32_t>(traj.config.save_stride)};
  file.write(reinterpret_cast<const char*>(header), sizeof(header));
  for (const FourierField& state : traj.states)
    file.write(reinterpret_cast<const char*>(state.coeffs.data()),
               static_cast<std::streamsize>(state.coeffs.size() * sizeof(double)));
}

}  // namespace rshe
