#include "gaussdef/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "gaussdef/gaussian.hpp"

namespace gaussdef {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224964, 0.063092092629978553291, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776};

struct Segment {
  double a, b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

struct LogSegment {
  double a, b;
  LogValue value;
  LogValue error;
  bool operator<(const LogSegment& o) const {
    return error.log_abs() < o.error.log_abs();
  }
};

Segment eval_segment(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  if (!std::isfinite(fc)) throw NonFiniteIntegrand("non-finite integrand sample");
  double k15 = kWgk[7] * fc;
  double g7 = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    if (!std::isfinite(f1) || !std::isfinite(f2)) {
      throw NonFiniteIntegrand("non-finite integrand sample");
    }
    k15 += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) g7 += kWg[i / 2] * (f1 + f2);
  }
  return {a, b, k15 * h, std::fabs(k15 - g7) * h};
}

LogSegment eval_segment_log(const std::function<double(double)>& log_f, double a,
                            double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double lf[15];
  lf[14] = log_f(c);
  double m = lf[14];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    lf[2 * i] = log_f(c - dx);
    lf[2 * i + 1] = log_f(c + dx);
    m = std::max(m, std::max(lf[2 * i], lf[2 * i + 1]));
  }
  if (m == -std::numeric_limits<double>::infinity()) {
    return {a, b, LogValue::zero(), LogValue::zero()};
  }
  if (std::isnan(m) || m == std::numeric_limits<double>::infinity()) {
    throw NonFiniteIntegrand("non-finite log-integrand sample");
  }
  double k15 = kWgk[7] * std::exp(lf[14] - m);
  double g7 = kWg[3] * std::exp(lf[14] - m);
  for (int i = 0; i < 7; ++i) {
    const double e1 = std::exp(lf[2 * i] - m);
    const double e2 = std::exp(lf[2 * i + 1] - m);
    k15 += kWgk[i] * (e1 + e2);
    if (i % 2 == 1) g7 += kWg[i / 2] * (e1 + e2);
  }
  LogValue val = LogValue::from_log(m + std::log(k15 * h));
  double diff = std::fabs(k15 - g7) * h;
  LogValue err = diff > 0 ? LogValue::from_log(m + std::log(diff)) : LogValue::zero();
  return {a, b, val, err};
}

std::vector<double> initial_points(double a, double b,
                                   const std::vector<double>& breakpoints) {
  std::vector<double> pts{a, b};
  for (double x : breakpoints) {
    if (x > a && x < b) pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

IntegralResult adapt_plain(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg,
                           const std::vector<double>& breakpoints) {
  cfg.validate();
  std::priority_queue<Segment> heap;
  double total = 0.0, toterr = 0.0;
  auto pts = initial_points(a, b, breakpoints);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Segment s = eval_segment(f, pts[i], pts[i + 1]);
    total += s.value;
    toterr += s.error;
    heap.push(s);
  }
  int splits = 0;
  while (toterr > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
    if (splits >= cfg.max_subdivisions) {
      throw ToleranceNotMet("integrate: tolerance not met after max subdivisions",
                            total, toterr);
    }
    Segment worst = heap.top();
    heap.pop();
    total -= worst.value;
    toterr -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted at double res
      total += worst.value;
      toterr += worst.error;
      break;
    }
    Segment s1 = eval_segment(f, worst.a, mid);
    Segment s2 = eval_segment(f, mid, worst.b);
    total += s1.value + s2.value;
    toterr += s1.error + s2.error;
    heap.push(s1);
    heap.push(s2);
    ++splits;
  }
  return {total, toterr, splits};
}

LogIntegralResult adapt_log(const std::function<double(double)>& log_f, double a,
                            double b, const QuadratureConfig& cfg,
                            const std::vector<double>& breakpoints) {
  cfg.validate();
  std::priority_queue<LogSegment> heap;
  std::vector<LogValue> vals, errs;
  auto pts = initial_points(a, b, breakpoints);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    LogSegment s = eval_segment_log(log_f, pts[i], pts[i + 1]);
    vals.push_back(s.value);
    errs.push_back(s.error);
    heap.push(s);
  }
  LogValue total = log_sum(vals);
  LogValue toterr = log_sum(errs);
  const LogValue abs_tol = LogValue::from_double(cfg.abs_tol);
  auto converged = [&]() {
    LogValue bound = total.abs() * LogValue::from_double(cfg.rel_tol);
    if (abs_tol > bound) bound = abs_tol;
    return toterr <= bound;
  };
  int splits = 0;
  while (!converged()) {
    if (splits >= cfg.max_subdivisions) {
      throw ToleranceNotMet("integrate_log_domain: tolerance not met",
                            total.value(), toterr.value());
    }
    LogSegment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;
    LogSegment s1 = eval_segment_log(log_f, worst.a, mid);
    LogSegment s2 = eval_segment_log(log_f, mid, worst.b);
    total = total - worst.value + s1.value + s2.value;
    toterr = toterr - worst.error + s1.error + s2.error;
    heap.push(s1);
    heap.push(s2);
    ++splits;
  }
  return {total, toterr, splits};
}

// u in [0,1) -> x = a + u/(1-u); initial dyadic partition so that adaptivity
// cannot declare victory before it has ever seen a distant peak
void add_dyadic_u(std::vector<double>& ubrk) {
  for (int j = 1; j <= 45; ++j) ubrk.push_back(1.0 - std::ldexp(1.0, -j));
}

double to_u(double a, double x) { return (x - a) / (1.0 + (x - a)); }

}  // namespace

IntegralResult integrate_plain(const std::function<double(double)>& f, double a,
                               double b, const QuadratureConfig& cfg,
                               const std::vector<double>& breakpoints) {
  if (!(a < b)) return {0.0, 0.0, 0};
  if (std::isinf(a) || std::isinf(b)) {
    throw std::invalid_argument("integrate_plain: finite interval required");
  }
  return adapt_plain(f, a, b, cfg, breakpoints);
}

IntegralResult integrate_gauss(const std::function<LogValue(double)>& f, double a,
                               double b, const QuadratureConfig& cfg,
                               const std::vector<double>& breakpoints) {
  if (!(a < b)) return {0.0, 0.0, 0};
  auto weighted = [&f](double x) {
    LogValue v = f(x);
    if (v.is_zero()) return 0.0;
    return v.sign() * std::exp(v.log_abs() + std_normal_log_pdf(x));
  };
  const bool lo_inf = std::isinf(a), hi_inf = std::isinf(b);
  if (!lo_inf && !hi_inf) {
    return adapt_plain(weighted, a, b, cfg, breakpoints);
  }
  if (lo_inf && !hi_inf) {
    // mirror to [-b, infinity)
    std::vector<double> mirrored;
    for (double x : breakpoints) mirrored.push_back(-x);
    return integrate_gauss([&f](double x) { return f(-x); }, -b,
                           std::numeric_limits<double>::infinity(), cfg, mirrored);
  }
  if (lo_inf && hi_inf) {
    IntegralResult left = integrate_gauss(f, a, 0.0, cfg, breakpoints);
    IntegralResult right = integrate_gauss(f, 0.0, b, cfg, breakpoints);
    return {left.value + right.value, left.error + right.error,
            left.subdivisions + right.subdivisions};
  }
  // [a, infinity)
  std::vector<double> ubrk;
  add_dyadic_u(ubrk);
  for (double x : breakpoints) {
    if (x > a) ubrk.push_back(to_u(a, x));
  }
  auto g = [&weighted, a](double u) {
    const double om = 1.0 - u;
    const double x = a + u / om;
    const double w = weighted(x);
    return w == 0.0 ? 0.0 : w / (om * om);
  };
  return adapt_plain(g, 0.0, 1.0, cfg, ubrk);
}

LogIntegralResult integrate_log_domain(const std::function<double(double)>& log_f,
                                       double a, double b,
                                       const QuadratureConfig& cfg,
                                       const std::vector<double>& breakpoints) {
  if (!(a < b)) return {LogValue::zero(), LogValue::zero(), 0};
  const bool lo_inf = std::isinf(a), hi_inf = std::isinf(b);
  if (!lo_inf && !hi_inf) {
    return adapt_log(log_f, a, b, cfg, breakpoints);
  }
  if (lo_inf && !hi_inf) {
    std::vector<double> mirrored;
    for (double x : breakpoints) mirrored.push_back(-x);
    return integrate_log_domain([&log_f](double x) { return log_f(-x); }, -b,
                                std::numeric_limits<double>::infinity(), cfg,
                                mirrored);
  }
  if (lo_inf && hi_inf) {
    LogIntegralResult left = integrate_log_domain(log_f, a, 0.0, cfg, breakpoints);
    LogIntegralResult right = integrate_log_domain(log_f, 0.0, b, cfg, breakpoints);
    return {left.value + right.value, left.error + right.error,
            left.subdivisions + right.subdivisions};
  }
  std::vector<double> ubrk;
  add_dyadic_u(ubrk);
  for (double x : breakpoints) {
    if (x > a) ubrk.push_back(to_u(a, x));
  }
  auto g = [&log_f, a](double u) {
    const double om = 1.0 - u;
    const double x = a + u / om;
    return log_f(x) - 2.0 * std::log(om);
  };
  return adapt_log(g, 0.0, 1.0, cfg, ubrk);
}

}  // namespace gaussdef
