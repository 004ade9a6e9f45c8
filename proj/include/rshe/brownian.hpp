#pragma once

#include <cstdint>
#include <functional>
#include <vector>

// Increment lattice of the driving Brownian family (W^n): i.i.d. N(0, dt)
// increments for each noise mode n and step k, extended by `margin` extra
// genuine increments on each side of [0,1] so that time mollification near
// the endpoints is covered by sampled data.

namespace rshe {

struct BrownianLattice {
  int noise_max_mode = 0;  // N_w
  double dt = 0.0;
  int steps = 0;  // K, with K*dt = 1
  int margin = 0;
  std::uint64_t seed = 0;
  // increments[(n + N_w) * row + (k + margin)], k in [-margin, K-1+margin]
  std::vector<double> increments;

  int row_length() const { return steps + 2 * margin; }

  double increment(int n, int k) const {
    return increments[static_cast<std::size_t>(n + noise_max_mode) *
                          static_cast<std::size_t>(row_length()) +
                      static_cast<std::size_t>(k + margin)];
  }
  double& increment_ref(int n, int k) {
    return increments[static_cast<std::size_t>(n + noise_max_mode) *
                          static_cast<std::size_t>(row_length()) +
                      static_cast<std::size_t>(k + margin)];
  }

  // Path values W_{t_j} with W_0 = 0, j in [-margin, K+margin];
  // returned vector index j + margin.
  std::vector<double> mode_path(int n) const;

  static BrownianLattice sample(std::uint64_t seed, int noise_max_mode, double dt,
                                int margin);
  static BrownianLattice zeros(int noise_max_mode, double dt, int margin);
  // Deterministic lattice with increments of the given per-mode path
  // functions t -> W^n(t) (test injection).
  static BrownianLattice from_paths(
      int noise_max_mode, double dt, int margin,
      const std::function<double(int, double)>& path);

  // Lattice at step factor*dt whose increments are sums of consecutive fine
  // increments (refinement coupling for order tests). Requires factor | K
  // and factor | margin.
  BrownianLattice coarsened(int factor) const;
};

// Increments of the time-mollified paths W^{delta,n} = rho_delta * W^n on the
// in-range steps k = 0..K-1. The discrete kernel rho_delta((k-j)dt)*dt is
// renormalized to unit mass, so constants are smoothed exactly and the
// degenerate delta = dt case reproduces the raw increments.
struct SmoothedIncrements {
  int noise_max_mode = 0;
  double dt = 0.0;
  int steps = 0;
  std::vector<double> increments;  // [(n+N_w)*K + k]

  double increment(int n, int k) const {
    return increments[static_cast<std::size_t>(n + noise_max_mode) *
                          static_cast<std::size_t>(steps) +
                      static_cast<std::size_t>(k)];
  }
};

SmoothedIncrements time_mollify(const BrownianLattice& lattice, double delta);

// d/ds of the mollified path at arbitrary s in [0,1], from precomputed path
// values (see BrownianLattice::mode_path).
double smoothed_path_derivative(const std::vector<double>& path, double dt,
                                int margin, double s, double delta);

}  // namespace rshe
