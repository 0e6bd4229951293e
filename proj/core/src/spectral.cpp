#include "gaussdef/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstdio>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "gaussdef/functionals.hpp"
#include "gaussdef/gaussian.hpp"
#include "gaussdef/transport.hpp"
#include "json.hpp"

namespace gaussdef {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// FFTW's planner is not thread-safe; execution on distinct plans is
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::complex<double>> fft_forward(std::vector<std::complex<double>> in) {
  std::vector<std::complex<double>> out(in.size());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(in.size()),
                            reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()),
                            FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

struct GridBuild {
  SpectralProfile profile;
  double s_x = 0.0, s_xi = 0.0;
};

GridBuild build_once(const ProfileFunction& f, double X, size_t n) {
  GridBuild out;
  SpectralProfile& p = out.profile;
  p.n = n;
  p.x0 = -X;
  p.dx = 2.0 * X / static_cast<double>(n);
  p.dxi = 1.0 / (static_cast<double>(n) * p.dx);

  p.h.resize(n);
  double norm_sq = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const double x = p.x0 + p.dx * static_cast<double>(j);
    const double lv = f.log_h(x);
    const double v = lv == -kInf ? 0.0 : std::exp(lv);
    p.h[j] = v;
    norm_sq += v * v;
  }
  norm_sq *= p.dx;
  if (std::fabs(norm_sq - 1.0) > 1e-6) {
    throw std::runtime_error("build_profile: grid L2 norm deviates from 1 by " +
                             std::to_string(std::fabs(norm_sq - 1.0)));
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (double& v : p.h) v *= scale;

  std::vector<std::complex<double>> in(n);
  for (size_t j = 0; j < n; ++j) in[j] = p.h[j];
  auto spec = fft_forward(std::move(in));

  // continuous transform: hhat(xi_m) = dx e^{-2 pi i x0 xi_m} FFT_m, with
  // xi_m = m dxi and negative frequencies wrapped
  p.xi.resize(n);
  p.hhat.resize(n);
  const long half = static_cast<long>(n) / 2;
  double nsq_hat = 0.0;
  for (long t = 0; t < static_cast<long>(n); ++t) {
    const long m = t - half;
    const double xi = static_cast<double>(m) * p.dxi;
    const size_t bin = static_cast<size_t>(m < 0 ? m + static_cast<long>(n) : m);
    const double phase = -2.0 * M_PI * p.x0 * xi;
    const std::complex<double> rot(std::cos(phase), std::sin(phase));
    p.xi[static_cast<size_t>(t)] = xi;
    p.hhat[static_cast<size_t>(t)] = p.dx * rot * spec[bin];
    nsq_hat += std::norm(p.hhat[static_cast<size_t>(t)]);
  }
  nsq_hat *= p.dxi;
  p.plancherel_defect = std::fabs(std::sqrt(nsq_hat) - 1.0);

  out.s_x = p.entropy_x();
  out.s_xi = p.entropy_xi();
  return out;
}

std::vector<double> abs_sq(const std::vector<std::complex<double>>& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = std::norm(v[i]);
  return out;
}

std::vector<double> sq(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * v[i];
  return out;
}

}  // namespace

LogValue optimizer_eval(const OptimizerParams& g, double x) {
  if (!(g.a > 0.0)) throw std::invalid_argument("optimizer_eval: a > 0 required");
  const double d = x - g.r;
  return LogValue::from_log(0.25 * std::log(2.0 * g.a / M_PI) - g.a * d * d);
}

ProfileFunction transformed_profile(const PiecewiseLogDensity& f) {
  auto fp = std::make_shared<PiecewiseLogDensity>(f);
  auto ev = std::make_shared<CdfEvaluator>(*fp);
  ProfileFunction out;
  out.log_h = [fp](double x) {
    const double y = 2.0 * std::sqrt(M_PI) * x;
    LogValue v = fp->evaluate(y);
    if (v.is_zero()) return -kInf;
    return 0.5 * v.log_abs() + log_g(x);
  };
  out.half_width = [fp, ev](double eps) {
    // h^2 mass outside [-X, X] equals the f dgamma mass outside
    // [-2 sqrt(pi) X, 2 sqrt(pi) X]
    auto mass_out = [&](double y) {
      double m = ev->cdf_complement_lv(y).value();
      if (fp->symmetry() == Symmetry::Even) return 2.0 * m;
      return m + ev->cdf(-y);
    };
    double hi = 2.0;
    while (mass_out(2.0 * std::sqrt(M_PI) * hi) > eps && hi < 400.0) hi *= 1.4;
    double lo = hi / 1.4;
    for (int it = 0; it < 50; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mass_out(2.0 * std::sqrt(M_PI) * mid) > eps) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return hi + 0.5;
  };
  const double scale = 2.0 * std::sqrt(M_PI);
  for (const Piece& p : f.pieces()) {
    out.hints.push_back(p.x0 / scale);
    if (p.kind == PieceKind::ExpTilt && std::isfinite(p.b)) {
      out.hints.push_back(p.b / scale);
    }
  }
  return out;
}

ProfileFunction gaussian_profile(const OptimizerParams& g) {
  if (!(g.a > 0.0)) throw std::invalid_argument("gaussian_profile: a > 0 required");
  ProfileFunction out;
  const OptimizerParams gc = g;
  out.log_h = [gc](double x) {
    const double d = x - gc.r;
    return 0.25 * std::log(2.0 * gc.a / M_PI) - gc.a * d * d;
  };
  out.half_width = [gc](double eps) {
    // G^2 mass outside [-X, X] <= 2 Phi_c(sqrt(2a) (X - |r|))
    const double z = std_normal_quantile_upper(std::min(0.5, eps / 2.0));
    return std::fabs(gc.r) + z / std::sqrt(2.0 * gc.a) + 0.5;
  };
  out.hints = {g.r};
  return out;
}

double SpectralProfile::entropy_x() const { return shannon_entropy(sq(h), dx); }

double SpectralProfile::entropy_xi() const {
  return shannon_entropy(abs_sq(hhat), dxi);
}

double SpectralProfile::second_moment_xi() const {
  double acc = 0.0;
  for (size_t i = 0; i < hhat.size(); ++i) acc += xi[i] * xi[i] * std::norm(hhat[i]);
  return acc * dxi;
}

SpectralProfile build_profile(const ProfileFunction& f, const SpectralOptions& opts) {
  if ((opts.n_init & (opts.n_init - 1)) != 0 || (opts.n_max & (opts.n_max - 1)) != 0) {
    throw std::invalid_argument("build_profile: grid sizes must be powers of two");
  }
  const double X = f.half_width(opts.tail_eps);
  GridBuild prev = build_once(f, X, opts.n_init);
  size_t n = opts.n_init;
  while (n * 2 <= opts.n_max) {
    n *= 2;
    GridBuild next = build_once(f, X, n);
    const double change = std::max(std::fabs(next.s_x - prev.s_x),
                                   std::fabs(next.s_xi - prev.s_xi));
    next.profile.richardson = change;
    next.profile.tail_bound = opts.tail_eps;
    prev = std::move(next);
    if (change <= opts.stability_tol && prev.profile.plancherel_defect <= 1e-6) {
      break;
    }
  }
  prev.profile.tail_bound = opts.tail_eps;
  if (prev.profile.plancherel_defect > 1e-6) {
    throw std::runtime_error("build_profile: Plancherel defect above 1e-6");
  }
  return std::move(prev.profile);
}

double shannon_entropy(const std::vector<double>& density, double dx) {
  if (density.size() < 2) throw std::invalid_argument("shannon_entropy: need samples");
  double acc = 0.0;
  for (size_t i = 0; i < density.size(); ++i) {
    double v = density[i];
    if (v < 0.0) {
      if (v < -1e-12) {
        throw std::invalid_argument("shannon_entropy: negative density sample");
      }
      v = 0.0;
    }
    double term = v > 0.0 ? v * std::log(v) : 0.0;
    if (i == 0 || i + 1 == density.size()) term *= 0.5;  // trapezoid ends
    acc += term;
  }
  return -acc * dx;
}

double bhi_deficit(const SpectralProfile& p) {
  return p.entropy_x() + p.entropy_xi() - (1.0 - std::log(2.0));
}

double fourier_wiener_remainder(const SpectralProfile& p) {
  // int |hhat/g|^2 log |hhat/g|^2 g^2 dxi
  //   = -S(|hhat|^2) - (log 2)/2 * ||hhat||^2 + 2 pi m_2(|hhat|^2)
  double nsq = 0.0;
  for (const auto& c : p.hhat) nsq += std::norm(c);
  nsq *= p.dxi;
  return -p.entropy_xi() - 0.5 * std::log(2.0) * nsq +
         2.0 * M_PI * p.second_moment_xi();
}

DeficitTransformIdentity deficit_transform_identity(const PiecewiseLogDensity& f,
                                                    const SpectralOptions& opts,
                                                    const QuadratureConfig& cfg) {
  DeficitTransformIdentity out;
  out.deficit = lsi_deficit(f, cfg).value;
  SpectralProfile p = build_profile(transformed_profile(f), opts);
  out.remainder = fourier_wiener_remainder(p);
  out.bhi = bhi_deficit(p);
  out.residual = out.deficit - out.remainder - out.bhi;
  return out;
}

void write_profile_csv(const SpectralProfile& p, std::ostream& os) {
  os << "x,h,re_hhat,im_hhat\n";
  char buf[160];
  for (size_t j = 0; j < p.n; ++j) {
    const double x = p.x0 + p.dx * static_cast<double>(j);
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", x, p.h[j],
                  p.hhat[j].real(), p.hhat[j].imag());
    os << buf;
  }
}

std::string profile_metadata_json(const SpectralProfile& p) {
  nlohmann::json j;
  j["x0"] = p.x0;
  j["dx"] = p.dx;
  j["dxi"] = p.dxi;
  j["n"] = p.n;
  j["plancherel_defect"] = p.plancherel_defect;
  j["entropy_stabilization"] = p.richardson;
  j["tail_bound"] = p.tail_bound;
  return j.dump(2);
}

}  // namespace gaussdef
