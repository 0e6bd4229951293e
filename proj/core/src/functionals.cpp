#include "gaussdef/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "gaussdef/gaussian.hpp"

namespace gaussdef {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

struct PieceTerms {
  LogValue fisher;   // int |f'|^2/f dgamma over the piece (unnormalized f~)
  LogValue entropy;  // int f~ log f~ dgamma over the piece
  LogValue half_fisher_minus_entropy;  // combined before rounding
  double quad_err = 0.0;
};

// log|e^a - 1| evaluated without cancellation
double log_abs_expm1(double a) {
  if (a == 0.0) return -kInf;
  if (a > 0.0) {
    if (a > 0.6931471805599453) return a + LogValue::log1mexp(-a);
    return std::log(std::expm1(a));
  }
  return LogValue::log1mexp(a);
}

PieceTerms flat_terms(const Piece& p) {
  PieceTerms out;
  out.fisher = LogValue::zero();
  if (p.log_v == -kInf || p.log_v == 0.0) {
    out.entropy = LogValue::zero();  // 0 log 0 := 0; 1 log 1 = 0
  } else {
    out.entropy = LogValue::from_log(p.log_v) * LogValue::from_double(p.log_v) *
                  std_normal_interval_lv(p.x0, p.x1);
  }
  out.half_fisher_minus_entropy = -out.entropy;
  return out;
}

PieceTerms tilt_terms(const Piece& p) {
  PieceTerms out;
  const LogValue r = LogValue::from_log(p.log_v);
  const double b = p.b;
  const LogValue phid = std_normal_interval_lv(p.x0 - b, p.x1 - b);
  const LogValue dgam = std_normal_pdf_lv(p.x0 - b) - std_normal_pdf_lv(p.x1 - b);
  const LogValue blv = LogValue::from_double(b);
  out.fisher = r * blv * blv * phid;
  out.entropy = r * LogValue::from_double(p.log_v + 0.5 * b * b) * phid +
                r * blv * dgam;
  // the r b^2 Phi terms cancel exactly between I/2 and H:
  out.half_fisher_minus_entropy =
      -(r * LogValue::from_double(p.log_v) * phid) - r * blv * dgam;
  return out;
}

PieceTerms bridge_terms(const Piece& p, const QuadratureConfig& cfg) {
  PieceTerms out;
  auto log_fisher = [&p](double x) {
    const double dl = p.dlog_value(x);
    if (dl == 0.0) return -kInf;
    return 2.0 * std::log(std::fabs(dl)) + p.log_weighted(x);
  };
  auto fr = integrate_log_domain(log_fisher, p.x0, p.x1, cfg);
  out.fisher = fr.value;
  out.quad_err += fr.error.value();

  // bridges run from top <= 1 down to bottom, so f log f keeps one sign
  auto log_ent = [&p](double x) {
    const double lv = p.log_value(x);
    if (lv == 0.0) return -kInf;
    return lv + std::log(-lv) + std_normal_log_pdf(x);
  };
  auto er = integrate_log_domain(log_ent, p.x0, p.x1, cfg);
  out.entropy = -er.value;
  out.quad_err += er.error.value();

  out.half_fisher_minus_entropy =
      LogValue::from_double(0.5) * out.fisher - out.entropy;
  return out;
}

PieceTerms generic_terms(const Piece& p, const QuadratureConfig& cfg) {
  // rational / grid pieces: Fisher in the log domain (nonnegative), entropy
  // in plain weighted form (f log f changes sign where f crosses 1, but
  // f gamma stays within double range for these pieces)
  PieceTerms out;
  auto log_fisher = [&p](double x) {
    const double dl = p.dlog_value(x);
    if (dl == 0.0) return -kInf;
    return 2.0 * std::log(std::fabs(dl)) + p.log_weighted(x);
  };
  auto fr = integrate_log_domain(log_fisher, p.x0, p.x1, cfg, {1.0});
  out.fisher = fr.value;
  out.quad_err += fr.error.value();

  auto flogf = [&p](double x) {
    const double lw = p.log_weighted(x);
    const double lv = p.log_value(x);
    if (lw == -kInf || lv == 0.0) return 0.0;
    return std::exp(lw) * lv;
  };
  if (std::isinf(p.x0) || std::isinf(p.x1)) {
    throw std::invalid_argument(
        "rel_entropy: rational/grid piece on an unbounded interval does not "
        "integrate against the Gaussian weight");
  }
  auto er = integrate_plain(flogf, p.x0, p.x1, cfg, {1.0});
  out.entropy = LogValue::from_double(er.value);
  out.quad_err += er.error;

  out.half_fisher_minus_entropy =
      LogValue::from_double(0.5) * out.fisher - out.entropy;
  return out;
}

PieceTerms piece_terms(const Piece& p, const QuadratureConfig& cfg) {
  switch (p.kind) {
    case PieceKind::Flat:
      return flat_terms(p);
    case PieceKind::ExpTilt:
      return tilt_terms(p);
    case PieceKind::Bridge:
      return bridge_terms(p, cfg);
    case PieceKind::Rational:
    case PieceKind::GenericGrid:
      return generic_terms(p, cfg);
  }
  return {};
}

struct Assembled {
  double fisher, entropy, deficit;
  double err;
};

Assembled assemble_functionals(const PiecewiseLogDensity& f,
                               const QuadratureConfig& cfg) {
  std::vector<LogValue> fi, en, df;
  double err = 0.0;
  for (const Piece& p : f.pieces()) {
    PieceTerms t = piece_terms(p, cfg);
    fi.push_back(t.fisher);
    en.push_back(t.entropy);
    df.push_back(t.half_fisher_minus_entropy);
    err += t.quad_err;
  }
  const double sym = f.symmetry() == Symmetry::Even ? 2.0 : 1.0;
  const LogValue scale =
      LogValue::from_double(sym) * LogValue::from_log(f.log_scale());
  Assembled out{};
  out.fisher = (scale * log_sum(fi)).value();
  out.entropy = (scale * log_sum(en)).value() + f.log_scale();
  out.deficit = (scale * log_sum(df)).value() - f.log_scale();
  out.err = err * sym + 1e-15 * (std::fabs(out.fisher) + std::fabs(out.entropy));
  return out;
}

bool is_integer(double p) { return p == std::floor(p) && std::fabs(p) < 40; }

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// int_piece |x|^p f~ dgamma for integer p via the moment recurrence
LogValue tilt_moment_closed(const Piece& p, int ip) {
  const LogValue r = LogValue::from_log(p.log_v);
  const double b = p.b;
  const double y0 = p.x0 - b, y1 = p.x1 - b;
  std::vector<LogValue> terms;
  auto add_range = [&](double a0, double a1, int sign) {
    if (!(a0 < a1)) return;
    for (int j = 0; j <= ip; ++j) {
      LogValue c = LogValue::from_double(sign * binom(ip, j) * std::pow(b, ip - j));
      terms.push_back(c * incomplete_gaussian_moment_interval(j, a0, a1));
    }
  };
  // |y + b|^p: sign flips below y = -b
  const int neg_sign = (ip % 2 == 0) ? +1 : -1;
  add_range(y0, std::min(y1, -b), neg_sign);
  add_range(std::max(y0, -b), y1, +1);
  return r * log_sum(terms);
}

LogValue flat_moment_closed(const Piece& p, int ip) {
  if (p.log_v == -kInf) return LogValue::zero();
  const LogValue v = LogValue::from_log(p.log_v);
  std::vector<LogValue> terms;
  const int neg_sign = (ip % 2 == 0) ? +1 : -1;
  if (p.x0 < 0.0) {
    terms.push_back(LogValue::from_double(neg_sign) *
                    incomplete_gaussian_moment_interval(ip, p.x0, std::min(p.x1, 0.0)));
  }
  if (p.x1 > 0.0) {
    terms.push_back(incomplete_gaussian_moment_interval(ip, std::max(p.x0, 0.0), p.x1));
  }
  return v * log_sum(terms);
}

struct PieceMoment {
  LogValue value;
  double err = 0.0;
};

PieceMoment piece_moment(const Piece& p, double pw, const QuadratureConfig& cfg) {
  PieceMoment out;
  if (is_integer(pw) && (p.kind == PieceKind::Flat || p.kind == PieceKind::ExpTilt)) {
    const int ip = static_cast<int>(pw);
    out.value = p.kind == PieceKind::Flat ? flat_moment_closed(p, ip)
                                          : tilt_moment_closed(p, ip);
    return out;
  }
  if (p.kind == PieceKind::ExpTilt) {
    // shift so the Gaussian weight is explicit: int |y+b|^p r gamma(y) dy
    auto g = [&](double y) {
      const double ab = std::fabs(y + p.b);
      if (ab == 0.0) return -kInf;
      return pw * std::log(ab) + p.log_v - 0.5 * y * y - kLogSqrt2Pi;
    };
    auto res = integrate_log_domain(g, p.x0 - p.b, p.x1 - p.b, cfg, {0.0, -p.b});
    out.value = res.value;
    out.err = res.error.value();
    return out;
  }
  auto g = [&](double x) {
    const double ax = std::fabs(x);
    if (ax == 0.0) return -kInf;
    return pw * std::log(ax) + p.log_weighted(x);
  };
  auto res = integrate_log_domain(g, p.x0, p.x1, cfg, {0.0, 1.0});
  out.value = res.value;
  out.err = res.error.value();
  return out;
}

}  // namespace

ValueWithError fisher_info(const PiecewiseLogDensity& f, const QuadratureConfig& cfg) {
  Assembled a = assemble_functionals(f, cfg);
  return {a.fisher, a.err};
}

ValueWithError rel_entropy(const PiecewiseLogDensity& f, const QuadratureConfig& cfg) {
  Assembled a = assemble_functionals(f, cfg);
  return {a.entropy, a.err};
}

ValueWithError lsi_deficit(const PiecewiseLogDensity& f, const QuadratureConfig& cfg) {
  Assembled a = assemble_functionals(f, cfg);
  if (a.deficit < -1e-9) {
    throw std::runtime_error("lsi_deficit: computed deficit below -1e-9");
  }
  return {a.deficit, a.err};
}

MomentValue moment(const PiecewiseLogDensity& f, double p, const QuadratureConfig& cfg) {
  if (!(p >= 1.0)) throw std::invalid_argument("moment: p >= 1 required");
  for (const Piece& pc : f.pieces()) {
    if (pc.kind == PieceKind::Rational && (std::isinf(pc.x1) || std::isinf(pc.x0))) {
      return {0.0, true};  // e^{x^2/2}/(1+x^2) tail defeats the Gaussian weight
    }
  }
  std::vector<LogValue> terms;
  double err = 0.0;
  for (const Piece& pc : f.pieces()) {
    PieceMoment m = piece_moment(pc, p, cfg);
    terms.push_back(m.value);
    err += m.err;
  }
  const double sym = f.symmetry() == Symmetry::Even ? 2.0 : 1.0;
  const LogValue scale = LogValue::from_double(sym) * LogValue::from_log(f.log_scale());
  return {(scale * log_sum(terms)).value(), false};
}

LogValue lp_dist_to_one(const PiecewiseLogDensity& f, double p,
                        const QuadratureConfig& cfg) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_dist_to_one: p >= 1 required");
  const double ls = f.log_scale();
  std::vector<LogValue> terms;
  for (const Piece& pc : f.pieces()) {
    const double span_hint = pc.kind == PieceKind::ExpTilt ? pc.b * p : 0.0;
    if (pc.kind == PieceKind::Flat) {
      const double a = ls + pc.log_v;  // log of the constant density value
      const double l = log_abs_expm1(a);
      if (l == -kInf) continue;
      terms.push_back(LogValue::from_log(p * l) * std_normal_interval_lv(pc.x0, pc.x1));
      continue;
    }
    auto log_integrand = [&](double x) {
      const double a = ls + pc.log_value(x);
      const double l = log_abs_expm1(a);
      if (l == -kInf) return -kInf;
      return p * l + std_normal_log_pdf(x);
    };
    std::vector<double> hints{span_hint, pc.b};
    if (pc.kind == PieceKind::ExpTilt && pc.b != 0.0) {
      hints.push_back((0.5 * pc.b * pc.b - (ls + pc.log_v)) / pc.b);  // f = 1 crossing
    }
    if (pc.kind == PieceKind::Rational) {
      // locate density-equals-one crossings by a coarse scan
      double prev_x = pc.x0, prev_a = ls + pc.log_value(pc.x0);
      for (int i = 1; i <= 128; ++i) {
        double x = pc.x0 + (pc.x1 - pc.x0) * i / 128.0;
        double a = ls + pc.log_value(x);
        if ((prev_a < 0) != (a < 0)) hints.push_back(0.5 * (prev_x + x));
        prev_x = x;
        prev_a = a;
      }
    }
    auto res = integrate_log_domain(log_integrand, pc.x0, pc.x1, cfg, hints);
    terms.push_back(res.value);
  }
  const double sym = f.symmetry() == Symmetry::Even ? 2.0 : 1.0;
  LogValue total = LogValue::from_double(sym) * log_sum(terms);
  return total.pow_abs(1.0 / p);
}

FunctionalReport compute_report(const PiecewiseLogDensity& f,
                                const std::vector<double>& moment_ps,
                                const std::vector<double>& lp_ps,
                                const QuadratureConfig& cfg) {
  FunctionalReport rep;
  Assembled a = assemble_functionals(f, cfg);
  rep.fisher = a.fisher;
  rep.entropy = a.entropy;
  rep.deficit = a.deficit;
  rep.fisher_err = rep.entropy_err = rep.deficit_err = a.err;
  rep.deficit_consistency = std::fabs(0.5 * a.fisher - a.entropy - a.deficit);
  for (double p : moment_ps) rep.moments[p] = moment(f, p, cfg);
  for (double p : lp_ps) rep.lp_dist[p] = lp_dist_to_one(f, p, cfg);
  return rep;
}

FunctionalReport tensorize(const FunctionalReport& rep, int n) {
  if (n < 1) throw std::invalid_argument("tensorize: n >= 1 required");
  if (n == 1) return rep;
  FunctionalReport out = rep;
  out.dim = n;
  out.moments.clear();
  out.moment_bounds.clear();
  for (const auto& [p, mv] : rep.moments) {
    if (mv.divergent) {
      out.moments[p] = mv;
      continue;
    }
    if (p == 2.0) {
      MomentValue shifted{mv.value + (n - 1), false};
      out.moments[p] = shifted;
      out.moment_bounds[p] = {shifted.value, shifted.value};
    } else {
      const double lower =
          std::pow(2.0, 1.0 - p) * mv.value - gaussian_abs_moment_dim(p, n - 1);
      out.moment_bounds[p] = {lower, std::nullopt};
    }
  }
  return out;
}

CheckResult pinsker_check(const PiecewiseLogDensity& f, const QuadratureConfig& cfg) {
  const double l1 = lp_dist_to_one(f, 1.0, cfg).value();
  const double H = rel_entropy(f, cfg).value;
  const double rhs = std::sqrt(2.0 * std::max(H, 0.0));
  return {l1 <= rhs + 1e-9, l1, rhs};
}

LogCheckResult entropy_lp_bound_check(const PiecewiseLogDensity& f, double p,
                                      const QuadratureConfig& cfg) {
  if (!(p > 1.0)) throw std::invalid_argument("entropy_lp_bound_check: p > 1");
  const double H = rel_entropy(f, cfg).value;
  const LogValue lp = lp_dist_to_one(f, p, cfg);
  const LogValue rhs = LogValue::from_double(2.0 / (p - 1.0)) * lp.pow_abs(p) +
                       LogValue::from_double(2.0) * lp;
  bool ok;
  if (rhs.log_abs() > 700.0) {
    ok = true;  // right side beyond double range, left side is a plain double
  } else {
    ok = H <= rhs.value() + 1e-9;
  }
  return {ok, H, rhs};
}

SqrtL2Report sqrt_l2_lower_bound_report(const PiecewiseLogDensity& f,
                                        const QuadratureConfig& cfg) {
  std::vector<double> hints;
  for (const Piece& pc : f.pieces()) {
    hints.push_back(pc.x0);
    if (pc.kind == PieceKind::ExpTilt) hints.push_back(0.5 * pc.b);
  }
  auto sqrtf = [&f](double x) {
    LogValue v = f.evaluate(x);
    return v.sqrt_abs();
  };
  const double lo = f.symmetry() == Symmetry::Even ? 0.0 : -kInf;
  auto r = integrate_gauss(sqrtf, lo, kInf, cfg, hints);
  const double mass_sqrt = (f.symmetry() == Symmetry::Even ? 2.0 : 1.0) * r.value;
  SqrtL2Report out;
  out.half_sq_l2 = 1.0 - mass_sqrt;  // (1/2)||sqrt f - 1||_2^2 = 1 - int sqrt f
  out.deficit = lsi_deficit(f, cfg).value;
  out.holds = out.deficit >= out.half_sq_l2 - 1e-9;
  return out;
}

}  // namespace gaussdef
