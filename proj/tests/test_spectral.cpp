#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "gaussdef/functionals.hpp"
#include "gaussdef/spectral.hpp"
#include "oracle/reference_values.hpp"

using namespace gaussdef;

namespace {
double g_val(double x) { return std::exp(log_g(x)); }

// grid frequency nearest to xi and the transform value there
std::pair<double, std::complex<double>> hhat_near(const SpectralProfile& p,
                                                  double xi) {
  size_t best = 0;
  double bd = 1e300;
  for (size_t i = 0; i < p.xi.size(); ++i) {
    if (std::fabs(p.xi[i] - xi) < bd) {
      bd = std::fabs(p.xi[i] - xi);
      best = i;
    }
  }
  return {p.xi[best], p.hhat[best]};
}
}  // namespace

TEST_CASE("optimizer evaluation") {
  CHECK(optimizer_eval({M_PI, 0.0}, 0.7).value() == doctest::Approx(g_val(0.7)));
  OptimizerParams p{3.0, 1.0};
  CHECK(optimizer_eval(p, 1.0).value() ==
        doctest::Approx(std::pow(2.0 * 3.0 / M_PI, 0.25)));
  CHECK_THROWS_AS(optimizer_eval({-1.0, 0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("g is self-dual on the grid") {
  SpectralOptions opts;
  opts.n_init = size_t{1} << 14;
  auto p = build_profile(gaussian_profile({M_PI, 0.0}), opts);
  CHECK(p.plancherel_defect < 1e-10);
  for (double xi : {0.0, 0.25, 0.8, 1.7}) {
    auto [xg, v] = hhat_near(p, xi);
    CHECK(std::fabs(v.imag()) < 1e-10);
    CHECK(v.real() == doctest::Approx(g_val(xg)).epsilon(1e-8));
  }
}

TEST_CASE("transform of G_{a,0} is G_{pi^2/a,0}") {
  const double a = 2.0 * M_PI;
  SpectralOptions opts;
  opts.n_init = size_t{1} << 14;
  auto p = build_profile(gaussian_profile({a, 0.0}), opts);
  const double ap = M_PI * M_PI / a;
  for (double xi : {0.0, 0.3, 1.1}) {
    auto [xg, v] = hhat_near(p, xi);
    double want = std::pow(2.0 * ap / M_PI, 0.25) * std::exp(-ap * xg * xg);
    CHECK(v.real() == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("transform is linear") {
  // h = (G_a + G_b)/c with the exact cross term in the normalization
  const double a = M_PI, b = 4.0 * M_PI;
  const double cross = std::pow(2.0 * a / M_PI, 0.25) *
                       std::pow(2.0 * b / M_PI, 0.25) * std::sqrt(M_PI / (a + b));
  const double c = std::sqrt(2.0 + 2.0 * cross);
  ProfileFunction f;
  f.log_h = [=](double x) {
    double va = 0.25 * std::log(2.0 * a / M_PI) - a * x * x;
    double vb = 0.25 * std::log(2.0 * b / M_PI) - b * x * x;
    return (LogValue::from_log(va) + LogValue::from_log(vb)).log_abs() - std::log(c);
  };
  f.half_width = [](double) { return 8.0; };
  SpectralOptions opts;
  opts.n_init = size_t{1} << 14;
  auto p = build_profile(f, opts);
  for (double xi : {0.0, 0.4, 1.2}) {
    auto [xg, v] = hhat_near(p, xi);
    const double aa = M_PI * M_PI / a, bb = M_PI * M_PI / b;
    double want = (std::pow(2.0 * aa / M_PI, 0.25) * std::exp(-aa * xg * xg) +
                   std::pow(2.0 * bb / M_PI, 0.25) * std::exp(-bb * xg * xg)) /
                  c;
    CHECK(v.real() == doctest::Approx(want).epsilon(1e-7));
  }
}

TEST_CASE("shannon entropy basics") {
  std::vector<double> u(1001, 1.0);  // uniform density on [0,1]
  CHECK(shannon_entropy(u, 1e-3) == doctest::Approx(0.0).epsilon(1e-12));
  std::vector<double> bad{0.5, -1e-6, 0.5};
  CHECK_THROWS_AS(shannon_entropy(bad, 0.1), std::invalid_argument);
  std::vector<double> clipped{0.5, -1e-14, 0.5};  // inside the tolerance band
  CHECK(std::isfinite(shannon_entropy(clipped, 0.1)));
}

TEST_CASE("Gaussian entropy sums reproduce the sharp constant") {
  SpectralOptions opts;
  opts.n_init = size_t{1} << 14;
  auto p = build_profile(gaussian_profile({M_PI, 0.0}), opts);
  CHECK(p.entropy_x() == doctest::Approx(oracle::shannon_Gpi_sq).epsilon(1e-9));
  CHECK(p.entropy_x() + p.entropy_xi() ==
        doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-9));
  auto p2 = build_profile(gaussian_profile({2.0 * M_PI, 0.0}), opts);
  CHECK(p2.entropy_x() == doctest::Approx(oracle::shannon_G2pi_sq).epsilon(1e-8));
  CHECK(p2.entropy_x() + p2.entropy_xi() ==
        doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("BHI deficit vanishes on Gaussian optimizers") {
  SpectralOptions opts;
  opts.n_init = size_t{1} << 15;
  for (double a : {M_PI / 4.0, 2.0 * M_PI}) {
    for (double r : {0.0, -3.0}) {
      auto p = build_profile(gaussian_profile({a, r}), opts);
      CHECK(std::fabs(bhi_deficit(p)) <= 1e-6);
    }
  }
}

TEST_CASE("transformed constant density gives h = g") {
  auto f = make_shifted_gaussian(0.0);
  auto prof = transformed_profile(f);
  CHECK(std::exp(prof.log_h(0.3)) == doctest::Approx(g_val(0.3)).epsilon(1e-12));
  auto p = build_profile(prof);
  CHECK(std::fabs(bhi_deficit(p)) <= 1e-8);
  CHECK(std::fabs(fourier_wiener_remainder(p)) <= 1e-8);
}

TEST_CASE("transformed tilt is a shifted Gaussian") {
  // f = g_b maps to h = G_{pi, b/(2 sqrt(pi))}
  const double b = 1.5;
  auto prof = transformed_profile(make_shifted_gaussian(b));
  const double r0 = b / (2.0 * std::sqrt(M_PI));
  for (double x : {-0.5, 0.0, r0, 1.0}) {
    double want = optimizer_eval({M_PI, r0}, x).value();
    CHECK(std::exp(prof.log_h(x)) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("deficit transform identity") {
  SpectralOptions opts;
  opts.n_init = size_t{1} << 15;
  for (double b : {1.0, 2.0}) {
    auto id = deficit_transform_identity(make_shifted_gaussian(b), opts);
    CHECK(std::fabs(id.deficit) <= 1e-10);
    CHECK(std::fabs(id.remainder) <= 5e-6);
    CHECK(std::fabs(id.bhi) <= 5e-6);
    CHECK(std::fabs(id.residual) <= 5e-6);
  }
  // bump: remainder >= 0 (Jensen), delta_BH <= delta, identity closes
  auto [f, prm] = make_bump_family(1.0, 0.5, 6.0);
  auto id = deficit_transform_identity(f, opts);
  CHECK(id.remainder >= -1e-6);
  CHECK(id.bhi <= id.deficit + 1e-6);
  CHECK(id.bhi >= -1e-6);
  CHECK(std::fabs(id.residual) <= 5e-6);
}

TEST_CASE("profile construction rejects unnormalized input") {
  ProfileFunction f;
  f.log_h = [](double x) { return log_g(x) + 0.3; };
  f.half_width = [](double) { return 7.0; };
  CHECK_THROWS_AS(build_profile(f), std::runtime_error);
}

TEST_CASE("profile CSV and metadata") {
  SpectralOptions opts;
  opts.n_init = size_t{1} << 10;
  opts.n_max = size_t{1} << 11;
  opts.stability_tol = 1.0;  // keep the grid small for the format test
  auto p = build_profile(gaussian_profile({M_PI, 0.0}), opts);
  std::ostringstream os;
  write_profile_csv(p, os);
  std::string csv = os.str();
  CHECK(csv.rfind("x,h,re_hhat,im_hhat\n", 0) == 0);
  size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == p.n + 1);
  auto meta = profile_metadata_json(p);
  CHECK(meta.find("plancherel_defect") != std::string::npos);
}
