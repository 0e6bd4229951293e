#include "gaussdef/transport.hpp"

#include <algorithm>
#include <cmath>

#include "gaussdef/gaussian.hpp"

namespace gaussdef {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

bool has_divergent_moment(const PiecewiseLogDensity& f) {
  for (const Piece& p : f.pieces()) {
    if (p.kind == PieceKind::Rational && (std::isinf(p.x0) || std::isinf(p.x1))) {
      return true;
    }
  }
  return false;
}
}  // namespace

CdfEvaluator::CdfEvaluator(const PiecewiseLogDensity& f, const QuadratureConfig& cfg)
    : f_(&f), cfg_(cfg) {
  const auto& pieces = f.pieces();
  mass_.resize(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) {
    mass_[i] = piece_mass(i, pieces[i].x0, pieces[i].x1);
  }
  prefix_.assign(pieces.size() + 1, LogValue::zero());
  for (size_t i = 0; i < pieces.size(); ++i) prefix_[i + 1] = prefix_[i] + mass_[i];
  suffix_.assign(pieces.size() + 1, LogValue::zero());
  for (size_t i = pieces.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + mass_[i];
  total_ = prefix_.back();
}

LogValue CdfEvaluator::piece_mass(size_t i, double a, double b) const {
  const Piece& p = f_->pieces()[i];
  if (!(a < b)) return LogValue::zero();
  switch (p.kind) {
    case PieceKind::Flat:
      if (p.log_v == -kInf) return LogValue::zero();
      return LogValue::from_log(p.log_v) * std_normal_interval_lv(a, b);
    case PieceKind::ExpTilt:
      return LogValue::from_log(p.log_v) * std_normal_interval_lv(a - p.b, b - p.b);
    case PieceKind::Rational: {
      const double m = (std::atan(b) - std::atan(a)) / kSqrt2Pi;
      return LogValue::from_log(p.log_v) * LogValue::from_double(m);
    }
    case PieceKind::Bridge:
    case PieceKind::GenericGrid: {
      auto log_f = [&p](double x) { return p.log_weighted(x); };
      return integrate_log_domain(log_f, a, b, cfg_).value;
    }
  }
  return LogValue::zero();
}

double CdfEvaluator::cdf(double x) const {
  if (f_->symmetry() == Symmetry::Even) {
    if (x < 0.0) return 1.0 - cdf(-x);
    const auto& pieces = f_->pieces();
    size_t i = 0;
    while (i + 1 < pieces.size() && pieces[i].x1 <= x) ++i;
    LogValue m = prefix_[i] + piece_mass(i, pieces[i].x0, std::min(x, pieces[i].x1));
    // F(x) = 1/2 + c * (mass on [0, x])
    return 0.5 + (m * LogValue::from_log(f_->log_scale())).value();
  }
  const auto& pieces = f_->pieces();
  if (x <= pieces.front().x0) return 0.0;
  size_t i = 0;
  while (i + 1 < pieces.size() && pieces[i].x1 <= x) ++i;
  LogValue m = prefix_[i] + piece_mass(i, pieces[i].x0, std::min(x, pieces[i].x1));
  return (m * LogValue::from_log(f_->log_scale())).value();
}

LogValue CdfEvaluator::cdf_complement_lv(double x) const {
  if (f_->symmetry() == Symmetry::Even && x < 0.0) {
    return LogValue::one() - cdf_complement_lv(-x);
  }
  const auto& pieces = f_->pieces();
  if (x >= pieces.back().x1) return LogValue::zero();
  if (x <= pieces.front().x0) {
    return suffix_[0] * LogValue::from_log(f_->log_scale());
  }
  size_t i = 0;
  while (i + 1 < pieces.size() && pieces[i].x1 <= x) ++i;
  LogValue m = suffix_[i + 1] + piece_mass(i, std::max(x, pieces[i].x0), pieces[i].x1);
  return m * LogValue::from_log(f_->log_scale());
}

double CdfEvaluator::invert_from_top(size_t i, const LogValue& target) const {
  const Piece& p = f_->pieces()[i];
  switch (p.kind) {
    case PieceKind::Flat: {
      const double t =
          (std_normal_cdf_complement_lv(p.x1) + target / LogValue::from_log(p.log_v))
              .value();
      return std_normal_quantile_upper(std::min(t, 1.0 - 1e-16));
    }
    case PieceKind::ExpTilt: {
      const double t = (std_normal_cdf_complement_lv(p.x1 - p.b) +
                        target / LogValue::from_log(p.log_v))
                           .value();
      return p.b + std_normal_quantile_upper(std::min(t, 1.0 - 1e-16));
    }
    case PieceKind::Rational: {
      const double m = (target / LogValue::from_log(p.log_v)).value() * kSqrt2Pi;
      return std::tan(std::atan(p.x1) - m);
    }
    case PieceKind::Bridge:
    case PieceKind::GenericGrid: {
      double lo = p.x0, hi = p.x1;
      while (hi - lo > 1e-15 * std::max(1.0, std::fabs(hi))) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (piece_mass(i, mid, p.x1) > target) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
  }
  return p.x0;
}

double CdfEvaluator::invert_from_bottom(size_t i, const LogValue& target) const {
  const Piece& p = f_->pieces()[i];
  switch (p.kind) {
    case PieceKind::Flat: {
      // v (Phi(x) - Phi(x0)) = target, solved through the mirror image
      const double t = (std_normal_cdf_complement_lv(-p.x0) +
                        target / LogValue::from_log(p.log_v))
                           .value();
      return -std_normal_quantile_upper(std::min(t, 1.0 - 1e-16));
    }
    case PieceKind::ExpTilt: {
      const double t = (std_normal_cdf_complement_lv(p.b - p.x0) +
                        target / LogValue::from_log(p.log_v))
                           .value();
      return p.b - std_normal_quantile_upper(std::min(t, 1.0 - 1e-16));
    }
    case PieceKind::Rational: {
      const double m = (target / LogValue::from_log(p.log_v)).value() * kSqrt2Pi;
      return std::tan(std::atan(p.x0) + m);
    }
    case PieceKind::Bridge:
    case PieceKind::GenericGrid: {
      double lo = p.x0, hi = p.x1;
      while (hi - lo > 1e-15 * std::max(1.0, std::fabs(hi))) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (piece_mass(i, p.x0, mid) < target) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
  }
  return p.x1;
}

double CdfEvaluator::quantile_upper(double v) const {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::invalid_argument("quantile_upper: v must lie in (0,1)");
  }
  if (f_->symmetry() == Symmetry::Even && v > 0.5) {
    return -quantile_upper(1.0 - v);
  }
  LogValue target = LogValue::from_double(v) / LogValue::from_log(f_->log_scale());
  size_t n = f_->pieces().size();
  size_t i = n - 1;
  while (i > 0 && suffix_[i] < target) --i;
  LogValue local = target - suffix_[i + 1];
  if (local.sign() <= 0) return f_->pieces()[i].x1;
  return invert_from_top(i, local);
}

double CdfEvaluator::quantile_lower(double w) const {
  if (!(w > 0.0 && w < 1.0)) {
    throw std::invalid_argument("quantile_lower: w must lie in (0,1)");
  }
  if (f_->symmetry() == Symmetry::Even) return -quantile_upper(w);
  LogValue target = LogValue::from_double(w) / LogValue::from_log(f_->log_scale());
  size_t n = f_->pieces().size();
  size_t i = 0;
  while (i + 1 < n && prefix_[i + 1] < target) ++i;
  LogValue local = target - prefix_[i];
  if (local.sign() <= 0) return f_->pieces()[i].x0;
  return invert_from_bottom(i, local);
}

double CdfEvaluator::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("quantile: u must lie in (0,1)");
  }
  if (u >= 0.5) return quantile_upper(1.0 - u);
  return quantile_lower(u);
}

QuantileTable QuantileTable::build(const CdfEvaluator& ev, int n) {
  if (n < 8) throw std::invalid_argument("QuantileTable: n >= 8 required");
  QuantileTable t;
  const double zmax = 7.05;  // Phi(-7.05) < 1e-12, covering the required band
  for (int i = 0; i < n; ++i) {
    const double z = -zmax + 2 * zmax * i / (n - 1.0);
    const double u = std_normal_cdf(z);
    t.u.push_back(u);
    t.q.push_back(ev.quantile(u));
  }
  return t;
}

double QuantileTable::interpolate(double uu) const {
  auto it = std::upper_bound(u.begin(), u.end(), uu);
  size_t i = it == u.begin() ? 0 : (it - u.begin()) - 1;
  if (i + 1 >= u.size()) i = u.size() - 2;
  const double w = (uu - u[i]) / (u[i + 1] - u[i]);
  return q[i] + w * (q[i + 1] - q[i]);
}

WassersteinResult wasserstein_p(const PiecewiseLogDensity& mu,
                                const PiecewiseLogDensity& nu, double p,
                                const QuadratureConfig& cfg) {
  if (!(p >= 1.0)) throw std::invalid_argument("wasserstein_p: p >= 1 required");
  if (has_divergent_moment(mu) || has_divergent_moment(nu)) {
    throw DivergentMoment("wasserstein_p: divergent p-th moment");
  }
  CdfEvaluator emu(mu, cfg), enu(nu, cfg);

  // dyadic panels toward both endpoints; within each panel the quantile
  // difference is smooth and GK converges fast
  const double v_min = 1e-16;
  std::vector<double> edges;
  for (double e = v_min; e < 0.5; e *= 2.0) edges.push_back(e);
  edges.push_back(0.5);

  double total = 0.0, toterr = 0.0;
  QuadratureConfig panel_cfg = cfg;
  panel_cfg.abs_tol = cfg.abs_tol / (2.0 * edges.size());
  panel_cfg.rel_tol = cfg.rel_tol;

  auto upper_diff = [&](double v) {
    const double d = emu.quantile_upper(v) - enu.quantile_upper(v);
    return std::pow(std::fabs(d), p);
  };
  auto lower_diff = [&](double w) {
    const double d = emu.quantile_lower(w) - enu.quantile_lower(w);
    return std::pow(std::fabs(d), p);
  };
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    auto ru = integrate_plain(upper_diff, edges[i], edges[i + 1], panel_cfg);
    auto rl = integrate_plain(lower_diff, edges[i], edges[i + 1], panel_cfg);
    total += ru.value + rl.value;
    toterr += ru.error + rl.error;
  }
  // quantile mass below v_min enters the error budget only
  toterr += v_min * (upper_diff(v_min) + lower_diff(v_min));

  const double w = std::pow(total, 1.0 / p);
  const double werr =
      total > 0.0 ? toterr / (p * std::pow(total, 1.0 - 1.0 / p)) : toterr;
  return {w, werr};
}

WassersteinResult wasserstein_to_gauss(const PiecewiseLogDensity& mu, double p,
                                       const QuadratureConfig& cfg) {
  return wasserstein_p(mu, make_shifted_gaussian(0.0), p, cfg);
}

TalagrandResult talagrand_deficit(const PiecewiseLogDensity& mu,
                                  const QuadratureConfig& cfg) {
  TalagrandResult out;
  out.entropy = rel_entropy(mu, cfg).value;
  auto w2 = wasserstein_to_gauss(mu, 2.0, cfg);
  out.w2sq = w2.value * w2.value;
  out.deficit = 2.0 * out.entropy - out.w2sq;
  if (out.deficit < -1e-9) {
    throw std::runtime_error("talagrand_deficit: computed deficit below -1e-9");
  }
  return out;
}

TransportReport hwi_chain(const PiecewiseLogDensity& mu, const QuadratureConfig& cfg) {
  TransportReport rep;
  rep.fisher = fisher_info(mu, cfg).value;
  rep.entropy = rel_entropy(mu, cfg).value;
  rep.deficit = lsi_deficit(mu, cfg).value;
  rep.w2 = wasserstein_to_gauss(mu, 2.0, cfg).value;
  rep.delta_tal = 2.0 * rep.entropy - rep.w2 * rep.w2;
  const double t1 = std::sqrt(rep.fisher) - rep.w2;
  rep.hwi_fisher_term = 0.5 * t1 * t1;
  const double t2 = std::sqrt(std::max(2.0 * rep.entropy, 0.0)) - rep.w2;
  rep.hwi_entropy_term = 0.5 * t2 * t2;
  if (rep.entropy > 0.0) {
    rep.tal_term = rep.delta_tal * rep.delta_tal / (16.0 * rep.entropy);
  }
  const double slack = 1e-9;
  rep.ordering_ok = rep.deficit >= rep.hwi_fisher_term - slack &&
                    rep.hwi_fisher_term >= rep.hwi_entropy_term - slack &&
                    (!rep.tal_term || rep.hwi_entropy_term >= *rep.tal_term - slack);
  return rep;
}

SandwichResult moment_sandwich_check(const PiecewiseLogDensity& mu, double p,
                                     const QuadratureConfig& cfg) {
  if (!(p >= 1.0)) throw std::invalid_argument("moment_sandwich_check: p >= 1");
  SandwichResult out;
  const double mp = moment(mu, p, cfg).value;
  const double mpg = gaussian_abs_moment(p);
  const double wp = wasserstein_to_gauss(mu, p, cfg).value;
  if (p == 1.0) {
    // the tighter single-power sandwich available at p = 1
    out.lower = mp - mpg;
    out.upper = mp + mpg;
    out.wpp = wp;
    out.ok = out.lower <= wp + 1e-8 && wp <= out.upper + 1e-8;
    return out;
  }
  out.wpp = std::pow(wp, p);
  out.lower = std::pow(2.0, 1.0 - p) * mp - mpg;
  out.upper = std::pow(2.0, p - 1.0) * (mp + mpg);
  out.ok = out.lower <= out.wpp + 1e-8 && out.wpp <= out.upper + 1e-8;
  return out;
}

}  // namespace gaussdef
