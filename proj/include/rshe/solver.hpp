#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rshe/brownian.hpp"
#include "rshe/fourier.hpp"
#include "rshe/noise.hpp"
#include "rshe/sigma.hpp"

// Exponential Euler time stepping of the mode-truncated system on [0,1]:
// the heat factor exp(-m^2 dt) is exact per mode, the noise coupling is
// explicit (Ito, left point). The Wong-Zakai variant advances the pathwise
// random PDE with Strang splitting between the heat factor and the reaction
// term driven by time-mollified increments plus the exact renormalization
// damping exp(-1/2 ||rho_eps||^2_{H^gamma} dt).

namespace rshe {

struct InitialCondition {
  enum class Kind { field, dirac, smooth };

  Kind kind = Kind::smooth;
  FourierField field;
  double x0 = 0.0;
  std::string name = "zero";  // "zero" | "one" | "cos" | "mix"

  static InitialCondition from_field(FourierField f);
  static InitialCondition dirac(double x0);
  static InitialCondition smooth(const std::string& name);

  FourierField coefficients(int n_max) const;
  bool pointwise_evaluable() const { return kind != Kind::dirac; }
  double value(double x) const;
  std::string tag() const;
};

struct SimConfig {
  int n_modes = 16;      // solver band N
  int noise_modes = 16;  // lattice band N_w expected by this run
  double dt = 1.0 / 4096.0;
  SigmaSpec sigma = SigmaSpec::zero();
  NoiseVariant variant = NoiseVariant::full();
  double gamma = 0.0;  // in [0, 1/4)
  InitialCondition ic = InitialCondition::smooth("zero");
  int save_stride = 1;
  std::uint64_t seed = 1;

  int step_count() const;
};

// Hard violations throw std::invalid_argument; soft issues (accuracy
// guards) come back as warning strings.
std::vector<std::string> validate_config(const SimConfig& cfg);

struct Trajectory {
  std::vector<double> times;
  std::vector<FourierField> states;
  SimConfig config;
  std::uint64_t noise_seed = 0;
  std::string noise_tag;

  const FourierField& initial() const { return states.front(); }
  const FourierField& final_state() const { return states.back(); }
};

class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(int step_index, double time)
      : std::runtime_error("solution lost finiteness at step " +
                           std::to_string(step_index) + " (t = " +
                           std::to_string(time) + ")"),
        step(step_index),
        t(time) {}
  int step;
  double t;
};

// One update a_{k+1} = E(a_k + sum_n row_n(sigma(u_k)) dW^n_k); k indexes
// the lattice step. Provided for tests; solve() runs the same update with a
// reused workspace.
FourierField step(const FourierField& state, int k, const BrownianLattice& w,
                  const SimConfig& cfg);

Trajectory solve(const SimConfig& cfg, const BrownianLattice& w);

// max over saved t of the weak-form defect against test field v in the
// H^{mu-1} pairing: left-point stochastic sums, trapezoid drift, on the
// trajectory's saved grid. v must not carry modes beyond the trajectory.
double weak_form_residual(const Trajectory& traj, const FourierField& v,
                          double mu, const BrownianLattice& w);

}  // namespace rshe
