#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaussdef/expansion_fit.hpp"
#include "gaussdef/functionals.hpp"
#include "gaussdef/transport.hpp"

namespace gaussdef {

// default geometric k-grid; callers clip it to their quadrature-valid range
std::vector<double> default_k_grid();

struct ClaimVerdict {
  std::string name;
  double predicted = 0.0;
  double value = 0.0;  // fitted coefficient or computed quantity
  double lo = 0.0, hi = 0.0;
  bool pass = false;
};

// one grid point of a bump-family sweep
struct SweepRow {
  double s = 0, t = 0, k = 0;
  double fisher = 0, entropy = 0, deficit = 0;
  double fisher_err = 0, entropy_err = 0;
  std::map<double, MomentValue> moments;
  std::map<double, LogValue> lp_dist;
  std::map<double, double> wasserstein;  // p -> W_p(mu_k, gamma)
  double delta_tal = std::numeric_limits<double>::quiet_NaN();
};

std::vector<SweepRow> bump_sweep(double s, double t,
                                 const std::vector<double>& k_list,
                                 const std::vector<double>& moment_ps,
                                 const std::vector<double>& lp_ps,
                                 const std::vector<double>& wass_ps,
                                 const QuadratureConfig& cfg = {},
                                 int workers = 0);

struct TheoremOneVerdict {
  double s = 0, t = 0;
  std::vector<SweepRow> rows;
  ExpansionFit deficit_fit;
  std::vector<ClaimVerdict> claims;
  bool all_pass = false;
};

// fits the computed deficit / entropy / moment / W_2 sequences against the
// family's leading-order expansions and checks the fitted coefficients
TheoremOneVerdict verify_theorem1(double s, double t,
                                  const std::vector<double>& k_list,
                                  const std::vector<double>& p_list,
                                  const QuadratureConfig& cfg = {});

enum class InstabilityTheorem { LsiW2, LsiW1, TalW2, TalW1 };

const char* instability_name(InstabilityTheorem id);
InstabilityTheorem instability_from_name(const std::string& name);

struct InstabilityParams {
  double M = 5.0;  // second-moment budget for the W2 suites (M > 1)
  double p = 2.0;  // Wasserstein order for the W1-style suites (p > 1)
  std::vector<double> k_list;  // empty: default grid clipped to k >= 10
};

struct InstabilityVerdict {
  InstabilityTheorem id = InstabilityTheorem::LsiW2;
  double s = 0, t = 0;
  std::vector<SweepRow> rows;
  std::vector<ClaimVerdict> claims;
  bool all_pass = false;
};

// runs the designated (s, t) for the named instability statement and applies
// finite-k trend tests: last-three monotonicity toward the claimed limit and
// a final-value band
InstabilityVerdict verify_instability_suite(InstabilityTheorem id,
                                            const InstabilityParams& prm = {},
                                            const QuadratureConfig& cfg = {});

struct HeavyTailReport {
  std::vector<double> k_list, C, inf_f, m2;
  bool c_in_range = false;         // C_k in (0, 2) throughout
  bool c_dev_decreasing = false;   // |C_k - 1| decreasing
  bool inf_bounded_below = false;  // inf f_k >= alpha across the grid
  double alpha = 0.0;
  // the per-member second moments are finite but grow without bound; the
  // k -> infinity limit law is the standard Cauchy law, whose second moment
  // diverges, and that is what the family-level tag records
  bool m2_family_divergent = false;
};

HeavyTailReport heavytail_report(const std::vector<double>& k_list,
                                 double alpha = 0.5,
                                 const QuadratureConfig& cfg = {});

std::string to_json(const TheoremOneVerdict& v);
std::string to_json(const InstabilityVerdict& v);
std::string to_json(const HeavyTailReport& v);

}  // namespace gaussdef
