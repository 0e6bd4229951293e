#include <cmath>

#include "doctest.h"
#include "gaussdef/expansion_fit.hpp"

using namespace gaussdef;

TEST_CASE("exact recovery of synthetic model data") {
  // 3 k^-2 log k + 5 k^-2 over k = 10..80
  std::vector<std::pair<double, double>> pts;
  for (double k : {10.0, 14.0, 20.0, 28.0, 40.0, 57.0, 80.0}) {
    pts.emplace_back(k, 3.0 * std::pow(k, -2.0) * std::log(k) + 5.0 * std::pow(k, -2.0));
  }
  auto fit = fit_expansion(pts, {basis_kt_log(2.0), basis_kt(2.0)});
  CHECK(fit.coefficients[0] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(fit.coefficients[1] == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(fit.residual_norm < 1e-9);
  CHECK(fit.reliable);
  CHECK(fit.coefficient("k^-2*logk") == fit.coefficients[0]);
  CHECK_THROWS_AS(fit.coefficient("nope"), std::invalid_argument);
}

TEST_CASE("constant data recovers the constant") {
  std::vector<std::pair<double, double>> pts;
  for (double k = 4.0; k <= 20.0; k += 2.0) pts.emplace_back(k, 7.25);
  auto fit = fit_expansion(pts, {basis_const()});
  CHECK(fit.coefficients[0] == doctest::Approx(7.25).epsilon(1e-12));
}

TEST_CASE("preconditions") {
  std::vector<std::pair<double, double>> few{{1.0, 1.0}, {2.0, 2.0}};
  CHECK_THROWS_AS(fit_expansion(few, {basis_const(), basis_kt(1.0)}),
                  std::invalid_argument);
  std::vector<std::pair<double, double>> unsorted{
      {1.0, 1.0}, {3.0, 2.0}, {2.0, 3.0}, {4.0, 1.0}, {5.0, 2.0}};
  CHECK_THROWS_AS(fit_expansion(unsorted, {basis_const()}), std::invalid_argument);
}

TEST_CASE("rank deficiency is an error, near-degeneracy a flag") {
  // duplicated basis function: exactly rank-deficient
  std::vector<std::pair<double, double>> pts;
  for (double k = 2.0; k <= 12.0; k += 1.0) pts.emplace_back(k, 1.0 / k);
  CHECK_THROWS_AS(fit_expansion(pts, {basis_kt(1.0), basis_kt(1.0)}),
                  std::runtime_error);
  // nearly collinear basis on a narrow k-range: flagged, not silent
  std::vector<std::pair<double, double>> narrow;
  for (int i = 0; i <= 8; ++i) {
    double k = 1000.0 + i * 1e-4;
    narrow.emplace_back(k, std::pow(k, -2.0));
  }
  auto fit = fit_expansion(narrow, {basis_kt_log(2.0), basis_kt(2.0)});
  CHECK(!fit.reliable);
  CHECK(fit.condition_number > 1e10);
}
