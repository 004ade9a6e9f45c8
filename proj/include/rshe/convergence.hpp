#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rshe/solver.hpp"

// Monte Carlo error functionals under synchronous coupling (reference and
// level solutions share one lattice per replica), rate regression, and the
// Wong-Zakai comparison runs.

namespace rshe {

inline constexpr const char* kVersion = "0.1.0";

enum class ExperimentKind { spectral, mollify, wong_zakai };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::spectral;
  SimConfig base;                // sigma, gamma, ic, dt, save_stride
  std::vector<double> levels;    // N values (spectral) or eps values (mollify/wz)
  int reference_modes = 128;     // N_ref (spectral); solver band for mollify/wz
  int replicas = 16;
  double mu = 0.25;
  double kappa_target = 0.1;
  std::uint64_t master_seed = 1;
  std::string out_path;

  // wong_zakai extras
  double wz_exponent_a = 3.0;  // delta = eps^A
  bool fk_checks = false;
  int fk_paths = 100000;
  double fk_dt = 1.0 / 1024.0;
};

struct ErrorRow {
  std::string kind;
  double h = 0.0;  // level parameter: N or eps
  double e_sup = 0.0, e_sup_stderr = 0.0;
  double e_int = 0.0, e_int_stderr = 0.0;
  int replicas = 0;
  int aborted = 0;
};

// sup over saved t of ||a_t - b_t||^2_{H^{mu-1}} and trapezoid
// int_0^1 ||a_s - b_s||^2_{H^mu} ds; coarser field zero-extended. Requires
// shared time grid and shared lattice (checked via the noise fingerprint).
std::pair<double, double> estimate_errors(const Trajectory& a, const Trajectory& b,
                                          double mu);

struct ConvergenceReport {
  std::vector<ErrorRow> rows;
  // paired separation z-scores between consecutive levels (coarse minus fine
  // at the respective argmax times, mean over replicas / stderr)
  std::vector<double> sup_separation_z;
  std::vector<std::string> notes;
};

ConvergenceReport run_convergence(const ExperimentConfig& cfg);

struct RateFit {
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
};

// OLS of log(e_sup) against log(h); needs >= 3 rows with positive errors.
RateFit fit_rate(const std::vector<ErrorRow>& rows);

struct WongZakaiReport {
  std::vector<ErrorRow> rows;  // h = eps; e_sup/e_int of the Ito-vs-WZ gap in L2
  // mean over replicas of sqrt(int ||.||^2): headline distance per eps
  std::vector<double> mean_distance;
  int monotone_replicas = 0;  // replicas with strictly decreasing distance
  int replicas = 0;
  struct FkRow {
    double t = 0.0, x = 0.0;
    double solver_value = 0.0, fk_mean = 0.0, fk_stderr = 0.0, tolerance = 0.0;
    bool pass = false;
  };
  std::vector<FkRow> fk_rows;
  std::vector<std::string> notes;
};

WongZakaiReport run_wong_zakai(const ExperimentConfig& cfg);

// Fixed-column CSV: kind,h,E_sup,E_sup_stderr,E_int,E_int_stderr,replicas,
// aborted,seed,version, preceded by one version header line.
std::string csv_text(const std::vector<ErrorRow>& rows, std::uint64_t seed);
void write_csv(const std::vector<ErrorRow>& rows, std::uint64_t seed,
               const std::string& path);

// Binary trajectory dump: magic "RSHE1", then uint32 N, K, stride (little
// endian), then the saved states (each 2N+1 doubles, little endian).
void dump_trajectory(const Trajectory& traj, const std::string& path);

}  // namespace rshe
