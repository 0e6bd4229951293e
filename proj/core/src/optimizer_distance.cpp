#include "gaussdef/optimizer_distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gaussdef/gaussian.hpp"

namespace gaussdef {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

double log_gaussian_opt(double a, double r, double x) {
  const double d = x - r;
  return 0.25 * std::log(2.0 * a / M_PI) - a * d * d;
}

// log | e^{la} - e^{lb} |
double log_abs_diff(double la, double lb) {
  if (la == -kInf) return lb;
  if (lb == -kInf) return la;
  const double hi = std::max(la, lb);
  const double d = -std::fabs(la - lb);
  const double m = LogValue::log1mexp(d);
  return m == -kInf ? -kInf : hi + m;
}

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
};

// golden-section minimization on [lo, hi] for a unimodal objective
GoldenResult golden_min(const std::function<double(double)>& f, double lo,
                        double hi, double rel_tol) {
  const double gr = 0.6180339887498949;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > rel_tol * (std::fabs(lo) + std::fabs(hi) + 1e-12)) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
}
}  // namespace

WeightSpec WeightSpec::power(double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("WeightSpec: lambda >= 0 required");
  return {Kind::Power, lambda};
}

WeightSpec WeightSpec::inverse_gaussian(double theta) {
  if (theta < 0.0) throw std::invalid_argument("WeightSpec: theta >= 0 required");
  return {Kind::InverseGaussian, theta};
}

double WeightSpec::log_weight(double x) const {
  switch (kind) {
    case Kind::Lebesgue:
      return 0.0;
    case Kind::Power: {
      if (param == 0.0) return 0.0;
      const double ax = std::fabs(x);
      return ax == 0.0 ? -kInf : param * std::log(ax);
    }
    case Kind::InverseGaussian:
      return param * (M_PI * x * x - 0.25 * std::log(2.0));
  }
  return 0.0;
}

WeightedNorm weighted_lp_norm(const std::function<double(double)>& log_abs_phi,
                              double p, const WeightSpec& w, double half_width,
                              const QuadratureConfig& cfg,
                              const std::vector<double>& hints) {
  if (!(p > 0.0)) throw std::invalid_argument("weighted_lp_norm: p > 0 required");
  auto log_int = [&](double x) {
    const double lv = log_abs_phi(x);
    if (lv == -kInf) return -kInf;
    return p * lv + w.log_weight(x);
  };
  std::vector<double> hs{0.0};
  for (double h : hints) {
    hs.push_back(h);
    hs.push_back(-h);
  }
  auto r = integrate_log_domain(log_int, -half_width, half_width, cfg, hs);
  return {r.value.pow_abs(1.0 / p), false};
}

WeightedNorm gaussian_invgauss_norm_closed(double a, double p, double theta) {
  if (!(a > 0.0) || !(p > 0.0) || theta < 0.0) {
    throw std::invalid_argument("gaussian_invgauss_norm_closed: bad parameters");
  }
  if (a * p <= theta * M_PI) return {LogValue::zero(), true};
  const double lg = 0.25 * (p - theta) * std::log(2.0) +
                    0.25 * (p - 2.0) * (std::log(a) - std::log(M_PI)) -
                    0.5 * std::log(p - theta * M_PI / a);
  return {LogValue::from_log(lg / p), false};
}

double gaussian_level_set_boundary(double a, double level) {
  if (!(a > M_PI)) {
    throw std::invalid_argument("gaussian_level_set_boundary: a > pi required");
  }
  if (!(level > 0.0) || !(level < std::pow(a / M_PI, 0.25))) {
    throw std::invalid_argument("gaussian_level_set_boundary: level out of range");
  }
  return 0.5 * std::sqrt((std::log(a) - std::log(M_PI) - 4.0 * std::log(level)) /
                         (a - M_PI));
}

WeightedNorm gaussian_truncated_invgauss_norm(double a, double level, double p,
                                              double theta) {
  const double beta = a * p - theta * M_PI;
  if (beta <= 0.0) return {LogValue::zero(), true};
  const double x0 = gaussian_level_set_boundary(a, level);
  const double central =
      1.0 - 2.0 * std_normal_cdf_complement(std::sqrt(2.0 * beta) * x0);
  const double lg = 0.25 * p * std::log(2.0 * a / M_PI) +
                    0.5 * (std::log(M_PI) - std::log(beta)) + std::log(central);
  return {LogValue::from_log(lg / p), false};
}

DistanceResult dist_to_optimizers(const ProfileFunction& h, bool h_even, double p,
                                  const WeightSpec& w, const DistanceOptions& opts,
                                  const QuadratureConfig& cfg) {
  if (!(p > 0.0)) throw std::invalid_argument("dist_to_optimizers: p > 0 required");
  const double a_min = w.kind == WeightSpec::Kind::InverseGaussian
                           ? w.param * M_PI / p * (1.0 + 1e-9)
                           : 1e-3;
  if (!(opts.a_max > a_min)) {
    throw std::invalid_argument("dist_to_optimizers: empty search domain");
  }

  // integration window: scan the weighted h-part, union the widest Gaussian
  const double x_h = h.half_width(1e-12);
  double X = 0.0;
  {
    const double scan_to = 2.0 * x_h + 10.0;
    double best = -kInf;
    std::vector<double> vals(801);
    for (int i = 0; i <= 800; ++i) {
      const double x = scan_to * i / 800.0;
      const double lv = h.log_h(x);
      vals[i] = lv == -kInf ? -kInf : p * lv + w.log_weight(x);
      best = std::max(best, vals[i]);
    }
    for (int i = 800; i >= 0; --i) {
      if (vals[i] > best - 80.0) {
        X = scan_to * i / 800.0 + 1.0;
        break;
      }
    }
    const double beta_min =
        a_min * p -
        (w.kind == WeightSpec::Kind::InverseGaussian ? w.param * M_PI : 0.0);
    X = std::max(X, std::sqrt(80.0 / beta_min));
  }

  const std::vector<double>& hints = h.hints;

  auto diff_norm_log = [&](double a, double r) {
    auto log_int = [&](double x) {
      const double la = h.log_h(x);
      const double lb = log_gaussian_opt(a, r, x);
      const double ld = log_abs_diff(la, lb);
      if (ld == -kInf) return -kInf;
      return p * ld + w.log_weight(x);
    };
    std::vector<double> hs{0.0, r};
    for (double v : hints) {
      hs.push_back(v);
      hs.push_back(-v);
    }
    auto res = integrate_log_domain(log_int, -X, X, cfg, hs);
    return res.value.log_abs() / p;
  };

  auto objective = [&](double log_a) {
    const double a = std::exp(log_a);
    if (h_even && w.even()) return diff_norm_log(a, 0.0);
    auto inner = [&](double r) { return diff_norm_log(a, r); };
    double best_r = 0.0, best_v = kInf;
    const int nr = 17;
    for (int i = 0; i < nr; ++i) {
      const double r = -opts.r_max + 2.0 * opts.r_max * i / (nr - 1.0);
      const double v = inner(r);
      if (v < best_v) {
        best_v = v;
        best_r = r;
      }
    }
    const double step = 2.0 * opts.r_max / (nr - 1.0);
    auto g = golden_min(inner, best_r - step, best_r + step, 1e-5);
    return g.fx;
  };

  // coarse geometric sweep in a, then golden within the surviving bracket
  const double lo = std::log(a_min), hi = std::log(opts.a_max);
  int best_i = 0;
  double best_v = kInf;
  std::vector<double> grid(opts.coarse_points);
  for (int i = 0; i < opts.coarse_points; ++i) {
    grid[i] = lo + (hi - lo) * i / (opts.coarse_points - 1.0);
    const double v = objective(grid[i]);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }
  DistanceResult out;
  out.bracket_found = best_i > 0 && best_i + 1 < opts.coarse_points;
  const double blo = grid[std::max(best_i - 1, 0)];
  const double bhi = grid[std::min(best_i + 1, opts.coarse_points - 1)];
  auto g = golden_min(objective, blo, bhi, opts.golden_rel_tol);
  out.a_star = std::exp(g.x);

  if (h_even && w.even()) {
    out.r_star = 0.0;
  } else {
    auto inner = [&](double r) { return diff_norm_log(out.a_star, r); };
    double best_r = 0.0;
    double bv = kInf;
    const int nr = 33;
    for (int i = 0; i < nr; ++i) {
      const double r = -opts.r_max + 2.0 * opts.r_max * i / (nr - 1.0);
      const double v = inner(r);
      if (v < bv) {
        bv = v;
        best_r = r;
      }
    }
    const double step = 2.0 * opts.r_max / (nr - 1.0);
    auto gr = golden_min(inner, best_r - step, best_r + step, 1e-6);
    out.r_star = gr.x;
    g.fx = gr.fx;
  }
  out.distance = LogValue::from_log(g.fx);

  auto hn = weighted_lp_norm(h.log_h, p, w, X, cfg, hints);
  out.h_norm = hn.value;
  return out;
}

double normalized_distance_ratio(const DistanceResult& d) {
  return std::exp(d.distance.log_abs() - d.h_norm.log_abs());
}

}  // namespace gaussdef
