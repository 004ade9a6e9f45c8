#include "rshe/brownian.hpp"

#include <cmath>
#include <stdexcept>

#include "rshe/mollifier.hpp"
#include "rshe/rng.hpp"

namespace rshe {

namespace {

int checked_step_count(double dt) {
  if (!(dt > 0.0) || dt > 1.0)
    throw std::invalid_argument("BrownianLattice: dt must be in (0, 1]");
  const double k_real = 1.0 / dt;
  const int k = static_cast<int>(std::llround(k_real));
  if (std::abs(k_real - k) > 1e-9 * k_real)
    throw std::invalid_argument("BrownianLattice: dt must divide 1 exactly");
  return k;
}

}  // namespace

std::vector<double> BrownianLattice::mode_path(int n) const {
  std::vector<double> path(static_cast<std::size_t>(steps + 2 * margin + 1), 0.0);
  // W_0 = 0 sits at index margin
  double acc = 0.0;
  for (int j = 1; j <= steps + margin; ++j) {
    acc += increment(n, j - 1);
    path[static_cast<std::size_t>(margin + j)] = acc;
  }
  acc = 0.0;
  for (int j = -1; j >= -margin; --j) {
    acc -= increment(n, j);
    path[static_cast<std::size_t>(margin + j)] = acc;
  }
  return path;
}

BrownianLattice BrownianLattice::sample(std::uint64_t seed, int noise_max_mode,
                                        double dt, int margin) {
  if (noise_max_mode < 0)
    throw std::invalid_argument("BrownianLattice: noise_max_mode < 0");
  if (margin < 0) throw std::invalid_argument("BrownianLattice: margin < 0");
  BrownianLattice w;
  w.noise_max_mode = noise_max_mode;
  w.dt = dt;
  w.steps = checked_step_count(dt);
  w.margin = margin;
  w.seed = seed;
  w.increments.resize(static_cast<std::size_t>(2 * noise_max_mode + 1) *
                      static_cast<std::size_t>(w.row_length()));
  const double scale = std::sqrt(dt);
  for (int n = -noise_max_mode; n <= noise_max_mode; ++n)
    for (int k = -margin; k < w.steps + margin; ++k)
      w.increment_ref(n, k) =
          scale * rng::gaussian_at(seed, k, n, rng::kTagLattice);
  return w;
}

BrownianLattice BrownianLattice::zeros(int noise_max_mode, double dt, int margin) {
  BrownianLattice w;
  w.noise_max_mode = noise_max_mode;
  w.dt = dt;
  w.steps = checked_step_count(dt);
  w.margin = margin;
  w.seed = 0;
  w.increments.assign(static_cast<std::size_t>(2 * noise_max_mode + 1) *
                          static_cast<std::size_t>(w.row_length()),
                      0.0);
  return w;
}

BrownianLattice BrownianLattice::from_paths(
    int noise_max_mode, double dt, int margin,
    const std::function<double(int, double)>& path) {
  BrownianLattice w = zeros(noise_max_mode, dt, margin);
  for (int n = -noise_max_mode; n <= noise_max_mode; ++n)
    for (int k = -margin; k < w.steps + margin; ++k)
      w.increment_ref(n, k) = path(n, (k + 1) * dt) - path(n, k * dt);
  return w;
}

BrownianLattice BrownianLattice::coarsened(int factor) const {
  if (factor < 1 || steps % factor != 0 || margin % factor != 0)
    throw std::invalid_argument("coarsened: factor must divide steps and margin");
  BrownianLattice w;
  w.noise_max_mode = noise_max_mode;
  w.dt = dt * factor;
  w.steps = steps / factor;
  w.margin = margin / factor;
  w.seed = seed;
  w.increments.resize(static_cast<std::size_t>(2 * noise_max_mode + 1) *
                      static_cast<std::size_t>(w.row_length()));
  for (int n = -noise_max_mode; n <= noise_max_mode; ++n)
    for (int k = -w.margin; k < w.steps + w.margin; ++k) {
      double acc = 0.0;
      for (int j = 0; j < factor; ++j) acc += increment(n, k * factor + j);
      w.increment_ref(n, k) = acc;
    }
  return w;
}

SmoothedIncrements time_mollify(const BrownianLattice& lattice, double delta) {
  if (!(delta > 0.0) || delta > lattice.margin * lattice.dt + 1e-15)
    throw std::invalid_argument("time_mollify: need 0 < delta <= margin*dt");
  const double dt = lattice.dt;
  const int reach = static_cast<int>(std::ceil(delta / dt)) - 1;

  // kernel weights over integer offsets, renormalized to unit mass
  std::vector<double> w(static_cast<std::size_t>(2 * reach + 1));
  double norm = 0.0;
  for (int r = -reach; r <= reach; ++r) {
    const double v = mollifier_kernel(r * dt, delta) * dt;
    w[static_cast<std::size_t>(r + reach)] = v;
    norm += v;
  }
  for (double& v : w) v /= norm;

  SmoothedIncrements out;
  out.noise_max_mode = lattice.noise_max_mode;
  out.dt = dt;
  out.steps = lattice.steps;
  out.increments.resize(static_cast<std::size_t>(2 * lattice.noise_max_mode + 1) *
                        static_cast<std::size_t>(lattice.steps));
  for (int n = -lattice.noise_max_mode; n <= lattice.noise_max_mode; ++n) {
    const std::vector<double> path = lattice.mode_path(n);
    const auto value_at = [&](int k) {
      double acc = 0.0;
      for (int r = -reach; r <= reach; ++r)
        acc += w[static_cast<std::size_t>(r + reach)] *
               path[static_cast<std::size_t>(lattice.margin + k - r)];
      return acc;
    };
    double prev = value_at(0);
    for (int k = 0; k < lattice.steps; ++k) {
      const double next = value_at(k + 1);
      out.increments[static_cast<std::size_t>(n + lattice.noise_max_mode) *
                         static_cast<std::size_t>(lattice.steps) +
                     static_cast<std::size_t>(k)] = next - prev;
      prev = next;
    }
  }
  return out;
}

double smoothed_path_derivative(const std::vector<double>& path, double dt,
                                int margin, double s, double delta) {
  const int reach = static_cast<int>(std::ceil(delta / dt)) - 1;
  double norm = 0.0;
  for (int r = -reach; r <= reach; ++r) norm += mollifier_kernel(r * dt, delta) * dt;

  const int total = static_cast<int>(path.size());  // steps + 2*margin + 1
  const int j_lo = std::max(static_cast<int>(std::floor((s - delta) / dt)), -margin);
  const int j_hi = std::min(static_cast<int>(std::ceil((s + delta) / dt)),
                            total - margin - 1);
  double acc = 0.0;
  for (int j = j_lo; j <= j_hi; ++j)
    acc += mollifier_kernel_derivative(s - j * dt, delta) *
           path[static_cast<std::size_t>(margin + j)] * dt;
  return acc / norm;
}

}  // namespace rshe
