#include "gaussdef/piecewise_density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gaussdef/gaussian.hpp"

namespace gaussdef {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

double BridgeSpec::value(double x) const {
  const double u = (x - left) / width();
  double sig;
  if (shape == BridgeShape::Quintic) {
    sig = u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
  } else {
    sig = u * u * (3.0 - 2.0 * u);
  }
  return bottom + (top - bottom) * (1.0 - sig);
}

double BridgeSpec::derivative(double x) const {
  const double u = (x - left) / width();
  double dsig;
  if (shape == BridgeShape::Quintic) {
    dsig = 30.0 * u * u * (1.0 - u) * (1.0 - u);
  } else {
    dsig = 6.0 * u * (1.0 - u);
  }
  return -(top - bottom) * dsig / width();
}

double BridgeSpec::max_abs_slope() const {
  const double peak = shape == BridgeShape::Quintic ? 15.0 / 8.0 : 1.5;
  return peak * (top - bottom) / width();
}

double Piece::log_value(double x) const {
  switch (kind) {
    case PieceKind::Flat:
      return log_v;
    case PieceKind::ExpTilt:
      return log_v + b * x - 0.5 * b * b;
    case PieceKind::Rational:
      return log_v + 0.5 * x * x - std::log1p(x * x);
    case PieceKind::Bridge:
      return std::log(bridge.value(x));
    case PieceKind::GenericGrid: {
      auto it = std::upper_bound(grid_x.begin(), grid_x.end(), x);
      size_t i = it == grid_x.begin() ? 0 : (it - grid_x.begin()) - 1;
      if (i + 1 >= grid_x.size()) i = grid_x.size() - 2;
      const double w = (x - grid_x[i]) / (grid_x[i + 1] - grid_x[i]);
      return grid_logv[i] + w * (grid_logv[i + 1] - grid_logv[i]);
    }
  }
  return -kInf;
}

double Piece::dlog_value(double x) const {
  switch (kind) {
    case PieceKind::Flat:
      return 0.0;
    case PieceKind::ExpTilt:
      return b;
    case PieceKind::Rational:
      return x - 2.0 * x / (1.0 + x * x);
    case PieceKind::Bridge:
      return bridge.derivative(x) / bridge.value(x);
    case PieceKind::GenericGrid: {
      auto it = std::upper_bound(grid_x.begin(), grid_x.end(), x);
      size_t i = it == grid_x.begin() ? 0 : (it - grid_x.begin()) - 1;
      if (i + 1 >= grid_x.size()) i = grid_x.size() - 2;
      return (grid_logv[i + 1] - grid_logv[i]) / (grid_x[i + 1] - grid_x[i]);
    }
  }
  return 0.0;
}

double Piece::log_weighted(double x) const {
  switch (kind) {
    case PieceKind::ExpTilt: {
      const double d = x - b;
      return log_v - 0.5 * d * d - kLogSqrt2Pi;
    }
    case PieceKind::Rational:
      return log_v - std::log1p(x * x) - kLogSqrt2Pi;
    default:
      return log_value(x) + std_normal_log_pdf(x);
  }
}

PiecewiseLogDensity PiecewiseLogDensity::assemble(Symmetry sym,
                                                  std::vector<Piece> pieces,
                                                  double norm_base,
                                                  LogValue norm_correction) {
  if (pieces.empty()) throw std::invalid_argument("density needs at least one piece");
  for (size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (pieces[i].x1 != pieces[i + 1].x0) {
      throw std::invalid_argument("density pieces must tile without gaps");
    }
  }
  if (sym == Symmetry::Even && pieces.front().x0 != 0.0) {
    throw std::invalid_argument("even density must start at x = 0");
  }
  PiecewiseLogDensity d;
  d.sym_ = sym;
  d.pieces_ = std::move(pieces);
  d.norm_base_ = norm_base;
  d.norm_corr_ = norm_correction;
  const double ratio = norm_correction.is_zero()
                           ? 0.0
                           : norm_correction.sign() *
                                 std::exp(norm_correction.log_abs() - std::log(norm_base));
  d.log_scale_ = -(std::log(norm_base) + std::log1p(ratio));
  return d;
}

const Piece& PiecewiseLogDensity::piece_at(double ax) const {
  size_t lo = 0, hi = pieces_.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (pieces_[mid].x0 <= ax) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return pieces_[lo];
}

double PiecewiseLogDensity::log_raw(double ax) const {
  return piece_at(ax).log_value(ax);
}

double PiecewiseLogDensity::dlog_raw(double ax) const {
  return piece_at(ax).dlog_value(ax);
}

LogValue PiecewiseLogDensity::evaluate(double x) const {
  const double ax = sym_ == Symmetry::Even ? std::fabs(x) : x;
  if (sym_ == Symmetry::FullLine &&
      (ax < pieces_.front().x0 || ax > pieces_.back().x1)) {
    return LogValue::zero();
  }
  return LogValue::from_log(log_scale_ + log_raw(ax));
}

double PiecewiseLogDensity::normalization_defect(const QuadratureConfig& cfg) const {
  std::vector<double> hints;
  for (const auto& p : pieces_) {
    hints.push_back(p.x0);
    if (p.kind == PieceKind::ExpTilt) hints.push_back(p.b);
  }
  auto log_f = [this](double x) {
    const double ax = sym_ == Symmetry::Even ? std::fabs(x) : x;
    return log_scale_ + piece_at(ax).log_weighted(ax);
  };
  double lo = sym_ == Symmetry::Even ? 0.0 : -kInf;
  LogIntegralResult r = integrate_log_domain(log_f, lo, kInf, cfg, hints);
  double mass = (sym_ == Symmetry::Even ? 2.0 : 1.0) * r.value.value();
  return std::fabs(mass - 1.0);
}

std::pair<PiecewiseLogDensity, BumpParams> make_bump_family(double s, double t,
                                                            double k,
                                                            BridgeShape shape) {
  if (!(s > 0.0) || !(t > 0.0)) {
    throw std::invalid_argument("make_bump_family: s > 0 and t > 0 required");
  }
  if (!(k >= 2.0)) {
    throw std::invalid_argument(
        "make_bump_family: k >= 2 required (bridge would collide with the core)");
  }
  BumpParams prm;
  prm.s = s;
  prm.t = t;
  prm.k = k;
  prm.d = 1.0 / (2.0 * k);
  prm.b = 2.0 * k;
  prm.r = 0.25 * std::min(s * std::pow(k, -t), 1.0);

  Piece flat;
  flat.kind = PieceKind::Flat;
  flat.x0 = 0.0;
  flat.x1 = k - prm.d;
  flat.log_v = 0.0;

  Piece br;
  br.kind = PieceKind::Bridge;
  br.x0 = k - prm.d;
  br.x1 = k;
  br.bridge = BridgeSpec{k - prm.d, k, 1.0, prm.r, shape};

  Piece tilt;
  tilt.kind = PieceKind::ExpTilt;
  tilt.x0 = k;
  tilt.x1 = kInf;
  tilt.log_v = std::log(prm.r);
  tilt.b = prm.b;

  // ||f~||_1 = 1 + 2 r + o(exp); the o(exp) part is carried separately, it
  // sits far below double epsilon from k ~ 10 on but still has exact meaning
  QuadratureConfig cfg;
  auto bridge_logf = [&br](double x) {
    return std::log(br.bridge.value(x)) + std_normal_log_pdf(x);
  };
  LogValue bridge_mass = integrate_log_domain(bridge_logf, br.x0, br.x1, cfg).value;
  LogValue corr = (-std_normal_cdf_complement_lv(k - prm.d)) + bridge_mass -
                  LogValue::from_double(prm.r) * std_normal_cdf_complement_lv(prm.b - k);
  corr = LogValue::from_double(2.0) * corr;
  const double base = 1.0 + 2.0 * prm.r;

  auto dens = PiecewiseLogDensity::assemble(Symmetry::Even, {flat, br, tilt},
                                            base, corr);
  prm.c = std::exp(dens.log_scale());
  return {std::move(dens), prm};
}

PiecewiseLogDensity make_shifted_gaussian(double b) {
  if (!std::isfinite(b)) {
    throw std::invalid_argument("make_shifted_gaussian: b must be finite");
  }
  Piece tilt;
  tilt.kind = PieceKind::ExpTilt;
  tilt.x0 = -kInf;
  tilt.x1 = kInf;
  tilt.log_v = 0.0;
  tilt.b = b;
  return PiecewiseLogDensity::assemble(Symmetry::FullLine, {tilt}, 1.0,
                                       LogValue::zero());
}

std::pair<PiecewiseLogDensity, double> make_heavytail_family(double k) {
  if (!(k >= 1.0)) {
    throw std::invalid_argument("make_heavytail_family: k >= 1 required");
  }
  // C_k = (2/pi)(arctan k + sqrt(2 pi) e^{k^2/2}(1 - Phi(k)) / (k^2+1));
  // e^{k^2/2}(1 - Phi(k)) is evaluated in the log domain
  const double tail_factor =
      std::exp(0.5 * k * k + std_normal_log_cdf_complement(k));
  const double C = (2.0 / M_PI) * (std::atan(k) + kSqrt2Pi * tail_factor / (k * k + 1.0));
  const double log_amp = std::log(kSqrt2Pi) - std::log(C * M_PI);

  Piece core;
  core.kind = PieceKind::Rational;
  core.x0 = 0.0;
  core.x1 = k;
  core.log_v = log_amp;

  Piece tail;
  tail.kind = PieceKind::Flat;
  tail.x0 = k;
  tail.x1 = kInf;
  tail.log_v = log_amp + 0.5 * k * k - std::log1p(k * k);

  // probability measure by the choice of C_k
  auto dens = PiecewiseLogDensity::assemble(Symmetry::Even, {core, tail}, 1.0,
                                            LogValue::zero());
  return {std::move(dens), C};
}

PiecewiseLogDensity make_generic_grid(std::vector<double> xs,
                                      std::vector<double> log_vals, Symmetry sym) {
  if (xs.size() < 2 || xs.size() != log_vals.size()) {
    throw std::invalid_argument("make_generic_grid: need matching tables, n >= 2");
  }
  if (!std::is_sorted(xs.begin(), xs.end())) {
    throw std::invalid_argument("make_generic_grid: grid must be increasing");
  }
  Piece grid;
  grid.kind = PieceKind::GenericGrid;
  grid.x0 = xs.front();
  grid.x1 = xs.back();
  grid.grid_x = std::move(xs);
  grid.grid_logv = std::move(log_vals);

  std::vector<Piece> pieces;
  if (sym == Symmetry::Even && grid.x0 > 0.0) {
    Piece lead;
    lead.kind = PieceKind::Flat;
    lead.x0 = 0.0;
    lead.x1 = grid.x0;
    lead.log_v = grid.grid_logv.front();
    pieces.push_back(lead);
  }
  const double back = grid.x1;
  pieces.push_back(std::move(grid));
  Piece zero_tail;
  zero_tail.kind = PieceKind::Flat;
  zero_tail.x0 = back;
  zero_tail.x1 = kInf;
  zero_tail.log_v = -kInf;
  pieces.push_back(zero_tail);

  auto tmp = PiecewiseLogDensity::assemble(sym, pieces, 1.0, LogValue::zero());
  auto f = [&tmp](double x) {
    const double ax = tmp.symmetry() == Symmetry::Even ? std::fabs(x) : x;
    return LogValue::from_log(tmp.log_raw(ax));
  };
  double lo = sym == Symmetry::Even ? 0.0 : tmp.pieces().front().x0;
  double hi = tmp.pieces().back().x0;  // zero beyond the table
  IntegralResult r = integrate_gauss(f, lo, hi, QuadratureConfig{});
  double mass = (sym == Symmetry::Even ? 2.0 : 1.0) * r.value;
  if (!(mass > 0.0)) throw std::invalid_argument("make_generic_grid: zero mass");
  return PiecewiseLogDensity::assemble(sym, tmp.pieces(), mass, LogValue::zero());
}

}  // namespace gaussdef
