#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rshe/brownian.hpp"
#include "rshe/solver.hpp"

// Monte Carlo evaluation of the probabilistic representation of the
// smoothed linear equation, conditional on to a frozen noise lattice: an
// auxiliary walk of variance 2 per unit time is averaged over
//   psi(x + Y_t) * exp( int_0^t F_s(x + Y_{t-s}) ds - 1/2 c_eps t ),
// where F_s is the time-mollified, mode-truncated noise field and c_eps the
// full renormalization constant. Independent of the PDE discretization;
// serves as the cross-check oracle for the Wong-Zakai solver.

namespace rshe {

struct FkQuery {
  double x = 0.0;
  double t = 1.0;          // in (0, 1]
  double eps = 0.3;        // spatial mollification scale
  double delta = 0.027;    // temporal mollification scale
  double gamma = 0.0;
  InitialCondition psi = InitialCondition::smooth("one");  // Dirac excluded
  int n_paths = 10000;
  double dt_fk = 1.0 / 1024.0;  // auxiliary-walk step; must divide t
  int mode_cut = 16;            // noise-mode truncation (<= lattice band)
  std::uint64_t seed = 1;
};

struct FkEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  long n_paths = 0;
  // fraction of the renormalization constant beyond mode_cut (truncation
  // tolerance of the exponent's mode sum)
  double tail_fraction = 0.0;
};

FkEstimate fk_estimate(const FkQuery& query, const BrownianLattice& w);

// Batch evaluation at (t, x) points with common auxiliary-walk randomness
// across points (variance-correlated comparisons).
std::vector<FkEstimate> fk_grid(const FkQuery& proto,
                                const std::vector<std::pair<double, double>>& points,
                                const BrownianLattice& w);

}  // namespace rshe
