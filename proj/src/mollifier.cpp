#include "rshe/mollifier.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace rshe {

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
struct GaussRule {
  std::vector<double> nodes, weights;
};

GaussRule make_gauss_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss24() {
  static const GaussRule rule = make_gauss_rule(24);
  return rule;
}

double unnormalized_bump(double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - x * x));
}

// panel Gauss-Legendre of f over [a,b]
template <typename F>
double panel_gauss(const F& f, double a, double b, int panels) {
  const GaussRule& rule = gauss24();
  const double h = (b - a) / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double local = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      local += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    acc += 0.5 * h * local;
  }
  return acc;
}

double bump_normalization() {
  static const double c = [] {
    const double integral =
        2.0 * panel_gauss([](double x) { return unnormalized_bump(x); }, 0.0, 1.0, 64);
    return 1.0 / integral;
  }();
  return c;
}

}  // namespace

double mollifier_bump(double x) { return bump_normalization() * unnormalized_bump(x); }

double mollifier_kernel(double y, double eps) {
  return mollifier_bump(y / eps) / eps;
}

double mollifier_kernel_derivative(double y, double eps) {
  const double x = y / eps;
  if (std::abs(x) >= 1.0) return 0.0;
  const double g = 1.0 - x * x;
  return mollifier_bump(x) * (-2.0 * x / (g * g)) / (eps * eps);
}

double bump_fourier(double s) {
  const double sa = std::abs(s);
  const int panels = std::max(8, static_cast<int>(std::ceil(sa / 2.0)));
  return bump_normalization() * 2.0 *
         panel_gauss([sa](double x) { return unnormalized_bump(x) * std::cos(sa * x); },
                     0.0, 1.0, panels);
}

Mollifier Mollifier::build(double eps, int n_table) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("Mollifier: eps must be in (0, 1]");
  if (n_table < 0) throw std::invalid_argument("Mollifier: n_table < 0");
  Mollifier m;
  m.eps = eps;
  m.multipliers.resize(static_cast<std::size_t>(n_table) + 1);
  for (int n = 0; n <= n_table; ++n)
    m.multipliers[static_cast<std::size_t>(n)] = bump_fourier(eps * n);
  return m;
}

double Mollifier::m(int n) const {
  const int a = std::abs(n);
  if (a >= table_size())
    throw std::out_of_range("Mollifier::m: mode beyond table");
  return multipliers[static_cast<std::size_t>(a)];
}

double renorm_constant(double eps, double gamma, int n_sum) {
  if (!(gamma >= 0.0) || gamma >= 0.25)
    throw std::invalid_argument("renorm_constant: gamma must be in [0, 1/4)");
  if (n_sum < 256) throw std::invalid_argument("renorm_constant: n_sum too small");
  const auto moll = shared_mollifier(eps, n_sum);
  const double inv_pi = 1.0 / std::numbers::pi;
  double sum = 1.0 / (2.0 * std::numbers::pi);
  auto term = [&](int n) {
    const double mn = moll->m(n);
    return inv_pi * std::pow(1.0 + static_cast<double>(n) * n, gamma) * mn * mn;
  };
  for (int n = 1; n <= n_sum; ++n) sum += term(n);

  // geometric tail estimate from the decay of the last two 64-term blocks
  double block_last = 0.0, block_prev = 0.0;
  for (int n = n_sum - 63; n <= n_sum; ++n) block_last += term(n);
  for (int n = n_sum - 127; n <= n_sum - 64; ++n) block_prev += term(n);
  double tail = 0.0;
  if (block_last > 0.0) {
    if (!(block_prev > block_last))
      throw std::invalid_argument("renorm_constant: multipliers not yet decaying; increase n_sum");
    const double q = block_last / block_prev;
    tail = block_last * q / (1.0 - q);
  }
  if (tail > 1e-10 * sum)
    throw std::invalid_argument("renorm_constant: tail estimate above tolerance; increase n_sum");
  return sum;
}

namespace {
std::mutex g_cache_mutex;
std::map<double, std::shared_ptr<const Mollifier>> g_mollifiers;
std::map<std::pair<double, double>, double> g_renorm;
}  // namespace

std::shared_ptr<const Mollifier> shared_mollifier(double eps, int n_table) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_mollifiers.find(eps);
  if (it != g_mollifiers.end() && it->second->table_size() > n_table)
    return it->second;
  int size = 256;
  while (size <= n_table) size *= 2;
  auto built = std::make_shared<const Mollifier>(Mollifier::build(eps, size));
  g_mollifiers[eps] = built;
  return built;
}

double shared_renorm_constant(double eps, double gamma) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_renorm.find({eps, gamma});
    if (it != g_renorm.end()) return it->second;
  }
  double value = 0.0;
  int n_sum = 2048;
  for (;; n_sum *= 2) {
    try {
      value = renorm_constant(eps, gamma, n_sum);
      break;
    } catch (const std::invalid_argument&) {
      if (n_sum >= 65536) throw;
    }
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_renorm[{eps, gamma}] = value;
  return value;
}

double renorm_tail_fraction(double eps, double gamma, int mode_cut) {
  const double full = shared_renorm_constant(eps, gamma);
  const auto moll = shared_mollifier(eps, mode_cut);
  const double inv_pi = 1.0 / std::numbers::pi;
  double head = 1.0 / (2.0 * std::numbers::pi);
  for (int n = 1; n <= mode_cut; ++n) {
    const double mn = moll->m(n);
    head += inv_pi * std::pow(1.0 + static_cast<double>(n) * n, gamma) * mn * mn;
  }
  return std::max(0.0, (full - head) / full);
}

}  // namespace rshe
