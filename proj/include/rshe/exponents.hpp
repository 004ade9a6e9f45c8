#pragma once

#include <optional>

// Admissible-exponent calculus for the nonlinear strong well-posedness
// region: from inputs (gamma, mu, q) derive
//   p = 1/(1 - 1/q),  kappa = 1/(2q),  theta = 1 + kappa - mu,
//   alpha0 = (2/q)/(1 - theta),
// and evaluate the feasibility conditions with signed slacks. The feasible
// region is nonempty exactly for gamma below gamma0 = (5 - sqrt(21))/4.

namespace rshe {

struct ExponentSet {
  double gamma = 0.0, mu = 0.0, q = 0.0;       // inputs
  double p = 0.0, kappa = 0.0, theta = 0.0, alpha0 = 0.0;  // derived
};

double gamma0();

// 8g / (4g^2 - 6g + 1); valid on [0, (3 - sqrt(5))/4)
double alpha0_closed_form(double gamma);

// Preconditions: gamma >= 0, mu in (gamma, 1/2 - gamma), q in (1, mu/gamma)
// (q only needs q > 1 when gamma = 0). Throws naming the violated
// inequality. Does not enforce theta or alpha0 bounds.
ExponentSet derive_exponents(double gamma, double mu, double q);

struct ConditionReport {
  bool theta_in_01 = false;
  bool alpha0_lt_2 = false;
  bool cond_a = false;  // (1 + 2 gamma - (1 + 2 mu)/q) p < 1
  bool cond_b = false;  // kappa >= 1/2 - 1/(2p)  (Sobolev embedding H^kappa in L^{2p})
  bool cond_c = false;  // kappa = theta mu + (1-theta)(mu-1), to 1e-14

  double slack_theta = 0.0;   // min(theta, 1 - theta)
  double slack_alpha0 = 0.0;  // 2 - alpha0
  double slack_a = 0.0;       // 1 - lhs_a
  double slack_b = 0.0;       // kappa - (1/2 - 1/(2p))
  double slack_c = 0.0;       // 1e-14 - |identity defect|

  bool feasible() const {
    return theta_in_01 && alpha0_lt_2 && cond_a && cond_b && cond_c;
  }
  // Margin used by the grid search; excludes the identity (c), whose
  // machine-epsilon slack would swamp the min.
  double min_slack() const;
};

ConditionReport check_conditions(const ExponentSet& e);

// Grid search over the open rectangle mu in (gamma, 1/2-gamma),
// q in (1, mu/gamma) (capped at 64 when gamma = 0); returns the feasible
// point with maximal min-slack, ties broken by lexicographically smallest
// (mu, q). Empty optional when no grid point is feasible.
std::optional<ExponentSet> find_admissible(double gamma, int grid_resolution);

}  // namespace rshe
