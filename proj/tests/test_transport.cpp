#include <cmath>

#include "doctest.h"
#include "gaussdef/gaussian.hpp"
#include "gaussdef/transport.hpp"
#include "oracle/reference_values.hpp"

using namespace gaussdef;

namespace {
double rel_err(double got, double want) {
  if (want == 0.0) return std::fabs(got);
  return std::fabs(got - want) / std::fabs(want);
}
}  // namespace

TEST_CASE("cdf basics") {
  auto [f, prm] = make_bump_family(1.0, 2.0, 10.0);
  CdfEvaluator ev(f);
  CHECK(ev.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(ev.cdf(50.0) == doctest::Approx(1.0));
  double prev = 0.0;
  for (double x = -12.0; x <= 12.0; x += 0.37) {
    double u = ev.cdf(x);
    CHECK(u >= prev - 1e-15);
    prev = u;
  }
  // upper tail beyond the bump: 1 - F(k) = c r Phi(b - k) + o(exp)
  LogValue cc = ev.cdf_complement_lv(prm.k);
  double want = prm.c * prm.r * std_normal_cdf(prm.b - prm.k);
  CHECK(rel_err(cc.value(), want) < 1e-12);
  // and far into the tilt, where doubles are long gone
  LogValue deep = ev.cdf_complement_lv(prm.b + 45.0);
  CHECK(deep.sign() == 1);
  double want_log = std::log(prm.c * prm.r) + std_normal_log_cdf_complement(45.0);
  CHECK(deep.log_abs() == doctest::Approx(want_log).epsilon(1e-10));
}

TEST_CASE("quantile round trips across piece types") {
  std::vector<PiecewiseLogDensity> ds;
  ds.push_back(make_bump_family(1.0, 2.0, 10.0).first);
  ds.push_back(make_bump_family(1.0, 0.5, 2.0).first);  // bridge carries real mass
  ds.push_back(make_shifted_gaussian(2.0));
  ds.push_back(make_heavytail_family(5.0).first);
  for (const auto& f : ds) {
    CdfEvaluator ev(f);
    for (double u : {1e-9, 1e-4, 0.02, 0.3, 0.5, 0.7, 0.85, 0.99, 1.0 - 1e-7}) {
      double x = ev.quantile(u);
      CHECK(std::fabs(ev.cdf(x) - u) <= 1e-10);
    }
    CHECK_THROWS_AS((void)ev.quantile(0.0), std::invalid_argument);
  }
}

TEST_CASE("quantile of the Gaussian itself") {
  auto gamma = make_shifted_gaussian(0.0);
  CdfEvaluator ev(gamma);
  CHECK(ev.quantile(std_normal_cdf(1.5)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(ev.quantile(0.5) == doctest::Approx(0.0));
}

TEST_CASE("bump quantiles around the tilt mass") {
  auto [f, prm] = make_bump_family(1.0, 2.0, 10.0);
  CdfEvaluator ev(f);
  // half the tilt mass sits at the bump center x = b
  double v_tilt = prm.c * prm.r * std_normal_cdf(prm.b - prm.k);
  CHECK(ev.quantile_upper(0.5 * v_tilt) == doctest::Approx(prm.b).epsilon(1e-9));
  // the quantile map crosses the (near-empty) band between the Gaussian
  // core and the bump within an o(exp)-thin range of tail mass
  double just_above = ev.quantile_upper(v_tilt * (1.0 + 1e-12));
  double just_below = ev.quantile_upper(v_tilt * (1.0 - 1e-12));
  CHECK(just_above < prm.k - prm.d);
  CHECK(just_below > prm.k);
  CHECK(just_below < prm.b);
}

TEST_CASE("quantile table invariants") {
  auto [f, prm] = make_bump_family(1.0, 2.0, 10.0);
  CdfEvaluator ev(f);
  auto tab = QuantileTable::build(ev, 256);
  REQUIRE(tab.u.size() == 256);
  CHECK(tab.u.front() <= 1e-12);
  CHECK(tab.u.back() >= 1.0 - 1e-12);
  for (size_t i = 1; i < tab.q.size(); ++i) CHECK(tab.q[i] > tab.q[i - 1]);
  for (size_t i = 0; i < tab.q.size(); ++i) {
    CHECK(std::fabs(ev.cdf(tab.q[i]) - tab.u[i]) <= 1e-9);
  }
  // interpolation stays between table nodes
  double mid = tab.interpolate(0.5 * (tab.u[100] + tab.u[101]));
  CHECK(mid >= tab.q[100]);
  CHECK(mid <= tab.q[101]);
}

TEST_CASE("W_p(mu, mu) = 0") {
  auto [f, prm] = make_bump_family(1.0, 2.0, 10.0);
  auto r = wasserstein_p(f, f, 2.0);
  CHECK(r.value <= 1e-12);
}

TEST_CASE("translation exactness: W_p(g_b, gamma) = |b|") {
  for (double b : {0.5, 1.0, 2.0, 4.0}) {
    auto g = make_shifted_gaussian(b);
    for (double p : {1.0, 2.0, 3.0}) {
      auto r = wasserstein_to_gauss(g, p);
      CHECK(std::fabs(r.value - b) <= 1e-8);
    }
  }
}

TEST_CASE("bump Wasserstein distances against the 60-digit oracle") {
  struct Row {
    double s, t, k, p, want;
  };
  const Row rows[] = {
      {1, 2, 5, 1, oracle::bump_W1_s1_t2_k5},
      {1, 2, 5, 2, oracle::bump_W2_s1_t2_k5},
      {1, 2, 5, 3, oracle::bump_W3_s1_t2_k5},
      {1, 2, 10, 1, oracle::bump_W1_s1_t2_k10},
      {1, 2, 10, 2, oracle::bump_W2_s1_t2_k10},
      {1, 2, 10, 3, oracle::bump_W3_s1_t2_k10},
      {1, 0.5, 5, 1, oracle::bump_W1_s1_t0_5_k5},
      {1, 0.5, 5, 2, oracle::bump_W2_s1_t0_5_k5},
      {1, 0.5, 5, 3, oracle::bump_W3_s1_t0_5_k5},
  };
  for (const Row& row : rows) {
    CAPTURE(row.t);
    CAPTURE(row.k);
    CAPTURE(row.p);
    auto [f, prm] = make_bump_family(row.s, row.t, row.k);
    auto r = wasserstein_to_gauss(f, row.p);
    CHECK(rel_err(r.value, row.want) < 5e-8);
  }
}

TEST_CASE("W_1 equals m_1(mu) - m_1(gamma) for quantile-dominating bumps") {
  for (auto [t, k] : {std::pair{2.0, 10.0}, {2.0, 40.0}, {0.5, 10.0}, {0.5, 40.0}}) {
    auto [f, prm] = make_bump_family(1.0, t, k);
    double w1 = wasserstein_to_gauss(f, 1.0).value;
    double m1 = moment(f, 1.0).value - gaussian_abs_moment(1.0);
    CHECK(rel_err(w1, m1) < 1e-8);
  }
}

TEST_CASE("monotonicity of W_p in p") {
  std::vector<PiecewiseLogDensity> ds;
  ds.push_back(make_bump_family(1.0, 2.0, 10.0).first);
  ds.push_back(make_bump_family(1.0, 0.5, 5.0).first);
  ds.push_back(make_shifted_gaussian(1.5));
  ds.push_back(make_heavytail_family(5.0).first);
  for (const auto& f : ds) {
    double w1 = wasserstein_to_gauss(f, 1.0).value;
    double w2 = wasserstein_to_gauss(f, 2.0).value;
    double w3 = wasserstein_to_gauss(f, 3.0).value;
    CHECK(w1 <= w2 + 1e-9);
    CHECK(w2 <= w3 + 1e-9);
  }
}

TEST_CASE("triangle inequality on measure triples") {
  auto gamma = make_shifted_gaussian(0.0);
  auto g1 = make_shifted_gaussian(1.0);
  auto bump = make_bump_family(1.0, 2.0, 5.0).first;
  for (double p : {1.0, 2.0}) {
    double ab = wasserstein_p(gamma, g1, p).value;
    double bc = wasserstein_p(g1, bump, p).value;
    double ac = wasserstein_p(gamma, bump, p).value;
    CHECK(ac <= ab + bc + 1e-8);
    CHECK(ab <= ac + bc + 1e-8);
  }
}

TEST_CASE("Talagrand deficit") {
  auto gamma = make_shifted_gaussian(0.0);
  auto tg = talagrand_deficit(gamma);
  CHECK(std::fabs(tg.deficit) <= 1e-10);
  // optimizers: 2 H = b^2 = W_2^2 exactly
  auto t2 = talagrand_deficit(make_shifted_gaussian(2.0));
  CHECK(std::fabs(t2.deficit) <= 1e-8);
  CHECK(t2.w2sq == doctest::Approx(4.0).epsilon(1e-9));
  // bump: 0 <= delta_Tal <= 4 sqrt(delta H)
  auto [f, prm] = make_bump_family(1.0, 2.0, 40.0);
  auto tb = talagrand_deficit(f);
  double delta = lsi_deficit(f).value;
  CHECK(tb.deficit >= -1e-9);
  CHECK(tb.deficit <= 4.0 * std::sqrt(delta * tb.entropy) + 1e-8);
}

TEST_CASE("W_2^2 sandwich from the entropy chain") {
  for (double k : {10.0, 20.0, 40.0}) {
    auto [f, prm] = make_bump_family(1.0, 2.0, k);
    double H = rel_entropy(f).value;
    double delta = lsi_deficit(f).value;
    double w2sq = std::pow(wasserstein_to_gauss(f, 2.0).value, 2);
    CHECK(w2sq <= 2.0 * H + 1e-8);
    CHECK(w2sq >= 2.0 * H - 4.0 * std::sqrt(delta * H) - 1e-8);
  }
}

TEST_CASE("HWI chain ordering") {
  std::vector<PiecewiseLogDensity> ds;
  ds.push_back(make_shifted_gaussian(0.0));
  ds.push_back(make_shifted_gaussian(1.0));
  ds.push_back(make_bump_family(1.0, 2.0, 20.0).first);
  ds.push_back(make_bump_family(1.0, 0.5, 10.0).first);
  ds.push_back(make_heavytail_family(5.0).first);
  for (const auto& f : ds) {
    auto rep = hwi_chain(f);
    CHECK(rep.ordering_ok);
  }
  // all four terms vanish on an optimizer
  auto rep = hwi_chain(make_shifted_gaussian(1.0));
  CHECK(std::fabs(rep.deficit) <= 1e-10);
  CHECK(std::fabs(rep.hwi_fisher_term) <= 1e-8);
  CHECK(std::fabs(rep.hwi_entropy_term) <= 1e-8);
  REQUIRE(rep.tal_term.has_value());
  CHECK(std::fabs(*rep.tal_term) <= 1e-8);
  // gamma itself: H = 0, the last ratio is reported absent
  auto grep = hwi_chain(make_shifted_gaussian(0.0));
  CHECK(!grep.tal_term.has_value());
  CHECK(grep.ordering_ok);
}

TEST_CASE("moment-Wasserstein sandwiches") {
  // gamma: W_p = 0 and the bounds are +-m_p(gamma)-sized
  auto gamma = make_shifted_gaussian(0.0);
  for (double p : {1.0, 2.0, 3.0}) {
    auto s = moment_sandwich_check(gamma, p);
    CHECK(s.ok);
  }
  // translated optimizer at p = 1: W_1 = b = m_1(nu_b) - m_1(gamma)
  // asymptotically in b; check the sandwich itself
  auto g3 = make_shifted_gaussian(3.0);
  auto s1 = moment_sandwich_check(g3, 1.0);
  CHECK(s1.ok);
  CHECK(s1.wpp == doctest::Approx(3.0).epsilon(1e-8));
  // bump family at the W_1-instability parameters
  for (double k : {5.0, 10.0, 20.0}) {
    auto [f, prm] = make_bump_family(1.0, 0.5, k);
    for (double p : {1.0, 2.0, 3.0}) {
      CHECK(moment_sandwich_check(f, p).ok);
    }
  }
}

TEST_CASE("divergent moments are refused") {
  Piece core;
  core.kind = PieceKind::Rational;
  core.x0 = 0.0;
  core.x1 = std::numeric_limits<double>::infinity();
  core.log_v = std::log(kSqrt2Pi / M_PI);
  auto cauchy = PiecewiseLogDensity::assemble(Symmetry::Even, {core}, 1.0,
                                              LogValue::zero());
  CHECK_THROWS_AS((void)wasserstein_to_gauss(cauchy, 2.0), DivergentMoment);
}

TEST_CASE("heavy-tail member transport is finite and sandwiched") {
  auto [f, C] = make_heavytail_family(5.0);
  auto w2 = wasserstein_to_gauss(f, 2.0);
  CHECK(std::isfinite(w2.value));
  CHECK(moment_sandwich_check(f, 2.0).ok);
  auto td = talagrand_deficit(f);
  CHECK(td.deficit >= -1e-9);
}
