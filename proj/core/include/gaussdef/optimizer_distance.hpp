#pragma once

#include <functional>
#include <optional>

#include "gaussdef/log_value.hpp"
#include "gaussdef/quadrature.hpp"
#include "gaussdef/spectral.hpp"

namespace gaussdef {

// reference measures for the weighted distance functionals:
//   lebesgue       dx
//   power          |x|^lambda dx
//   inverse_gaussian  g^{-theta} dx  (g the fixed self-dual Gaussian)
struct WeightSpec {
  enum class Kind { Lebesgue, Power, InverseGaussian };
  Kind kind = Kind::Lebesgue;
  double param = 0.0;

  static WeightSpec lebesgue() { return {Kind::Lebesgue, 0.0}; }
  static WeightSpec power(double lambda);
  static WeightSpec inverse_gaussian(double theta);

  double log_weight(double x) const;
  bool even() const { return true; }  // all three weights are even in x
};

struct WeightedNorm {
  LogValue value;     // meaningful only when !divergent
  bool divergent = false;
};

// || phi ||_{L^p(dw)} over [-X, X], accumulated in the log domain; the
// integrand is combined as p log|phi| + log w per node so nothing overflows
WeightedNorm weighted_lp_norm(const std::function<double(double)>& log_abs_phi,
                              double p, const WeightSpec& w, double half_width,
                              const QuadratureConfig& cfg = {},
                              const std::vector<double>& hints = {});

// closed form || G_a ||_{L^p(dm_theta)}^p = 2^{(p-theta)/4} (a/pi)^{(p-2)/4}
// (p - theta pi / a)^{-1/2}, finite iff a > theta pi / p
WeightedNorm gaussian_invgauss_norm_closed(double a, double p, double theta);

// || G_a 1_{G_a >= w G_pi} ||_{L^p(dm_theta)}: the level set is [-x0, x0]
// with x0 = (1/2) sqrt((log a - log pi - 4 log w) / (a - pi)), a > pi
WeightedNorm gaussian_truncated_invgauss_norm(double a, double level, double p,
                                              double theta);
double gaussian_level_set_boundary(double a, double level);

struct DistanceResult {
  LogValue distance;
  double a_star = 0.0;
  double r_star = 0.0;
  bool bracket_found = false;   // false: minimum pinned at a domain edge
  LogValue h_norm;              // || h ||_{L^p(dw)} for the normalized ratio
};

struct DistanceOptions {
  double a_max = 1000.0 * M_PI;
  int coarse_points = 48;
  double golden_rel_tol = 1e-6;
  double r_max = 12.0;  // search box for the center when h is not even
};

// inf_{a, r} || h - G_{a,r} ||_{L^p(dw)}. When h and the weight are both
// even the rearrangement argument pins r = 0 and the search is over a only;
// otherwise a nested search over (a, r) runs. For the inverse-Gaussian
// weight the domain is a > theta pi / p where the norms are finite.
DistanceResult dist_to_optimizers(const ProfileFunction& h, bool h_even, double p,
                                  const WeightSpec& w,
                                  const DistanceOptions& opts = {},
                                  const QuadratureConfig& cfg = {});

// dist / ||h||, finite even when both sides overflow doubles
double normalized_distance_ratio(const DistanceResult& d);

}  // namespace gaussdef
