#include "rshe/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rshe {

double gamma0() { return (5.0 - std::sqrt(21.0)) / 4.0; }

double alpha0_closed_form(double gamma) {
  const double upper = (3.0 - std::sqrt(5.0)) / 4.0;
  if (!(gamma >= 0.0) || !(gamma < upper))
    throw std::invalid_argument(
        "alpha0_closed_form: gamma must be in [0, (3-sqrt(5))/4)");
  return 8.0 * gamma / (4.0 * gamma * gamma - 6.0 * gamma + 1.0);
}

ExponentSet derive_exponents(double gamma, double mu, double q) {
  if (!(gamma >= 0.0))
    throw std::invalid_argument("derive_exponents: violated gamma >= 0");
  if (!(mu > gamma))
    throw std::invalid_argument("derive_exponents: violated mu > gamma");
  if (!(mu < 0.5 - gamma))
    throw std::invalid_argument("derive_exponents: violated mu < 1/2 - gamma");
  if (!(q > 1.0))
    throw std::invalid_argument("derive_exponents: violated q > 1");
  if (gamma > 0.0 && !(q < mu / gamma))
    throw std::invalid_argument("derive_exponents: violated q < mu/gamma");

  ExponentSet e;
  e.gamma = gamma;
  e.mu = mu;
  e.q = q;
  e.p = 1.0 / (1.0 - 1.0 / q);
  e.kappa = 1.0 / (2.0 * q);
  e.theta = 1.0 + e.kappa - mu;
  e.alpha0 = (2.0 / q) / (1.0 - e.theta);
  return e;
}

double ConditionReport::min_slack() const {
  return std::min(std::min(slack_theta, slack_alpha0), std::min(slack_a, slack_b));
}

ConditionReport check_conditions(const ExponentSet& e) {
  ConditionReport r;
  r.slack_theta = std::min(e.theta, 1.0 - e.theta);
  r.theta_in_01 = r.slack_theta > 0.0;

  r.slack_alpha0 = 2.0 - e.alpha0;
  r.alpha0_lt_2 = r.slack_alpha0 > 0.0;

  const double lhs_a = (1.0 + 2.0 * e.gamma - (1.0 + 2.0 * e.mu) / e.q) * e.p;
  r.slack_a = 1.0 - lhs_a;
  r.cond_a = r.slack_a > 0.0;

  r.slack_b = e.kappa - (0.5 - 1.0 / (2.0 * e.p));
  r.cond_b = r.slack_b >= 0.0;

  const double defect = e.kappa - (e.theta * e.mu + (1.0 - e.theta) * (e.mu - 1.0));
  r.slack_c = 1e-14 - std::abs(defect);
  r.cond_c = r.slack_c >= 0.0;
  return r;
}

std::optional<ExponentSet> find_admissible(double gamma, int grid_resolution) {
  if (!(gamma >= 0.0) || gamma >= 0.25)
    throw std::invalid_argument("find_admissible: gamma must be in [0, 1/4)");
  if (grid_resolution < 100)
    throw std::invalid_argument("find_admissible: grid_resolution must be >= 100");

  constexpr double kQCap = 64.0;  // gamma = 0 leaves q unbounded above
  const double mu_lo = gamma, mu_hi = 0.5 - gamma;
  std::optional<ExponentSet> best;
  double best_slack = -1.0;

  for (int i = 1; i <= grid_resolution; ++i) {
    const double mu = mu_lo + i * (mu_hi - mu_lo) / (grid_resolution + 1);
    const double q_hi = gamma > 0.0 ? mu / gamma : kQCap;
    if (!(q_hi > 1.0)) continue;
    for (int j = 1; j <= grid_resolution; ++j) {
      const double q = 1.0 + j * (q_hi - 1.0) / (grid_resolution + 1);
      const ExponentSet e = derive_exponents(gamma, mu, q);
      const ConditionReport r = check_conditions(e);
      if (!r.feasible()) continue;
      const double slack = r.min_slack();
      if (slack > best_slack) {
        best_slack = slack;
        best = e;
      }
    }
  }
  return best;
}

}  // namespace rshe
