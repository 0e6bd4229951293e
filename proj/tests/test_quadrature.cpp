#include <cmath>

#include "doctest.h"
#include "gaussdef/gaussian.hpp"
#include "gaussdef/quadrature.hpp"

using namespace gaussdef;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

double rel_err(double got, double want) {
  if (want == 0.0) return std::fabs(got);
  return std::fabs(got - want) / std::fabs(want);
}
}  // namespace

TEST_CASE("gaussian weight integrates to one") {
  auto one = [](double) { return LogValue::one(); };
  auto r = integrate_gauss(one, -kInf, kInf);
  CHECK(std::fabs(r.value - 1.0) < 1e-12);
  CHECK(r.error < 1e-10);
}

TEST_CASE("second moment of the weight") {
  auto x2 = [](double x) { return LogValue::from_double(x * x); };
  auto r = integrate_gauss(x2, -kInf, kInf);
  CHECK(rel_err(r.value, 1.0) < 1e-11);
}

TEST_CASE("tilt identity: int_k^inf e^{bx - b^2/2} dgamma = Phi(b - k)") {
  // the integrand factor alone overflows doubles well before b = 20
  for (double b = 1.0; b <= 20.0; b += 1.7) {
    for (double k = 0.0; k <= b; k += b / 3.0) {
      auto tilt = [b](double x) {
        return LogValue::from_log(b * x - 0.5 * b * b);
      };
      auto r = integrate_gauss(tilt, k, kInf, {}, {b});
      double want = std_normal_cdf(b - k);
      CHECK(rel_err(r.value, want) < 1e-10);
    }
  }
}

TEST_CASE("spec example: b=4, k=2 gives Phi(2)") {
  auto tilt = [](double x) { return LogValue::from_log(4.0 * x - 8.0); };
  auto r = integrate_gauss(tilt, 2.0, kInf);
  CHECK(rel_err(r.value, std_normal_cdf(2.0)) < 1e-10);
}

TEST_CASE("distant narrow peak is not missed without hints") {
  // density factor e^{bx-b^2/2} puts all mass near x = b = 60
  auto tilt = [](double x) { return LogValue::from_log(60.0 * x - 1800.0); };
  auto r = integrate_gauss(tilt, 0.0, kInf);
  CHECK(rel_err(r.value, 1.0) < 1e-9);
}

TEST_CASE("plain finite-interval integration") {
  auto r = integrate_plain([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(rel_err(r.value, 2.0) < 1e-12);
  CHECK_THROWS_AS(
      integrate_plain([](double x) { return x; }, 0.0, kInf),
      std::invalid_argument);
}

TEST_CASE("log-domain integration handles scales beyond double range") {
  // int e^{c - x^2/2} dx = e^c sqrt(2 pi) with c = 2000
  auto lf = [](double x) { return 2000.0 - 0.5 * x * x; };
  auto r = integrate_log_domain(lf, -kInf, kInf);
  CHECK(r.value.sign() == 1);
  CHECK(std::fabs(r.value.log_abs() - (2000.0 + 0.5 * std::log(2 * M_PI))) < 1e-10);
}

TEST_CASE("log-domain agrees with plain mode on a benign integrand") {
  auto lf = [](double x) { return -x * x; };
  auto lr = integrate_log_domain(lf, -3.0, 5.0);
  auto pr = integrate_plain([](double x) { return std::exp(-x * x); }, -3.0, 5.0);
  CHECK(rel_err(lr.value.value(), pr.value) < 1e-10);
}

TEST_CASE("tolerance failure is reported, not silently returned") {
  QuadratureConfig tight;
  tight.abs_tol = 1e-30;
  tight.rel_tol = 1e-30;
  tight.max_subdivisions = 4;
  auto f = [](double x) { return std::sqrt(std::fabs(std::sin(7 * x))); };
  CHECK_THROWS_AS(integrate_plain(f, 0.0, 3.0, tight), ToleranceNotMet);
}

TEST_CASE("non-finite integrand sample is an error") {
  auto bad = [](double x) {
    return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
  };
  CHECK_THROWS_AS(integrate_plain(bad, 0.0, 1.0), NonFiniteIntegrand);
}

TEST_CASE("config validation") {
  QuadratureConfig bad;
  bad.abs_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  QuadratureConfig bad2;
  bad2.max_subdivisions = 0;
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}
