#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rpdo/bounds.hpp"
#include "rpdo/maximal.hpp"
#include "rpdo/pdo.hpp"

namespace rpdo {

struct ExperimentConfig {
  std::string name;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string out_dir = ".";
  int threads = 0;
  std::map<std::string, double> params;
  std::vector<double> sweep;
};

ExperimentConfig parse_config(const std::string& path);
std::vector<std::string> list_experiments();
std::vector<std::string> validate(const ExperimentConfig& cfg);

struct RunReport {
  nlohmann::ordered_json json;
  bool pass = false;
  std::vector<std::string> artifacts;
};

// Dispatches one named experiment, writes the JSON report and CSV
// artifacts under out_dir, and returns the in-memory report.
RunReport run_experiment(const ExperimentConfig& cfg);

// --- structured experiment cores (shared with the acceptance suite) ----

struct SweepRow {
  std::string label;
  double value = 0.0;
};

struct Theorem1Sweep {
  struct Entry {
    std::string family;
    double b2 = 0.0;
    double norm = 0.0;
    double ratio = 0.0;
    bool converged = true;
  };
  std::vector<Entry> entries;
  double max_ratio = 0.0;
  bool all_converged = true;
};

Theorem1Sweep run_theorem1_sweep(Eigen::Index n, int count, std::uint64_t seed);

struct RescaleCheck {
  std::string family;
  double b2_drift_up = 0.0;
  double b2_drift_down = 0.0;
  double norm_drift_up = 0.0;
  double norm_drift_down = 0.0;
};

std::vector<RescaleCheck> run_rescale_checks(std::uint64_t seed);

struct GrowthRow {
  int n_terms = 0;
  double measured = 0.0;   // ||T f_N||_2 / ||f_0||_2
  double expected = 0.0;   // sum_{j=8}^{n_terms} 1/j
  double testfn_norm = 0.0;
  double testfn_expected = 0.0;
  double w_quantity = 0.0;
};

std::vector<GrowthRow> run_growth(Eigen::Index n, double delta,
                                  const std::vector<int>& sweep, double p);

struct CarlesonResult {
  std::vector<MaximalReport> per_m;
  double c_ratio = 0.0;  // max_m C / min_m C
  std::vector<double> b1_per_m;
  double b1_ratio = 0.0;
  Eigen::Index flagged = 0;
};

CarlesonResult run_carleson(Eigen::Index n, const std::vector<int>& m_list,
                            int n_functions, Eigen::Index n_sym, int k0_sym,
                            int n_fields, std::uint64_t seed);

struct ThinCircleResult {
  struct Entry {
    int m = 0;
    double multiplier_norm = 0.0;
    double rayleigh = 0.0;
    double combined = 0.0;
    Eigen::Index angle_count = 0;
  };
  std::vector<Entry> per_m;
  double ratio = 0.0;  // max combined / min combined
};

ThinCircleResult run_thin_circle(Eigen::Index n, const std::vector<int>& m_list,
                                 int n_functions, int k0, std::uint64_t seed);

struct DirectionalResult {
  struct Entry {
    double delta = 0.0;
    double homogeneous = 0.0;
    double w11_sup = 0.0;
    double sup_abs = 0.0;
  };
  std::vector<Entry> per_delta;
  bool strictly_increasing = false;
  int strong_steps = 0;  // increments >= 0.3 per delta halving
  double w11_ratio = 0.0;
};

DirectionalResult run_directional(Eigen::Index nx, Eigen::Index m_angular,
                                  int delta_min_exp, int delta_max_exp,
                                  std::uint64_t seed);

struct AlgebraResult {
  double max_product_ratio = 0.0;
  double max_exp_rate = 0.0;
  std::vector<double> product_ratios;
};

AlgebraResult run_algebra(Eigen::Index n, int pairs, std::uint64_t seed);

struct CapCertificates {
  L1Table l1;
  std::vector<DecayCertificate> certs;  // one per l
  std::vector<int> cert_l;
  double onset_slope = 0.0;  // slope of log2(onset) vs l
  ConeSumCheck cone_q2;
  bool all_pass = false;
};

CapCertificates run_cap_certificates(Eigen::Index n, int k0,
                                     const std::vector<int>& l_list,
                                     int n_angles, std::uint64_t seed);

struct RadialResult {
  std::vector<std::pair<int, double>> per_m;  // (m, quantity)
  double slope = 0.0;                         // log2 Q vs m, ~1/2
};

RadialResult run_radial(const std::vector<int>& m_list, int k0,
                        Eigen::Index nx, Eigen::Index nr);

// Block-interpolation Sobolev-type functional of the packed
// counterexample: sum over dyadic index blocks of
// (sup_x H^{1/2}-seminorm)^theta (sup_x L^inf)^{1-theta}, theta = 2/p.
double counterexample_w_quantity(const ModulatedBandSymbol& sym, double p,
                                 int x_samples);

}  // namespace rpdo
