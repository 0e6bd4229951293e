#include "gaussdef/expansion_fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace gaussdef {

BasisFunction basis_kt_log(double t) {
  char name[48];
  std::snprintf(name, sizeof(name), "k^-%g*logk", t);
  return {name, [t](double k) { return std::pow(k, -t) * std::log(k); }};
}

BasisFunction basis_kt(double t) {
  char name[48];
  std::snprintf(name, sizeof(name), "k^-%g", t);
  return {name, [t](double k) { return std::pow(k, -t); }};
}

BasisFunction basis_k_pow(double e) {
  char name[48];
  std::snprintf(name, sizeof(name), "k^%g", e);
  return {name, [e](double k) { return std::pow(k, e); }};
}

BasisFunction basis_const() {
  return {"1", [](double) { return 1.0; }};
}

double ExpansionFit::coefficient(const std::string& name) const {
  for (size_t i = 0; i < basis_names.size(); ++i) {
    if (basis_names[i] == name) return coefficients[i];
  }
  throw std::invalid_argument("ExpansionFit: no basis named " + name);
}

ExpansionFit fit_expansion(const std::vector<std::pair<double, double>>& points,
                           const std::vector<BasisFunction>& basis) {
  if (basis.empty()) throw std::invalid_argument("fit_expansion: empty basis");
  if (points.size() < basis.size() + 2) {
    throw std::invalid_argument("fit_expansion: need at least basis + 2 points");
  }
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i].first < points[i + 1].first)) {
      throw std::invalid_argument("fit_expansion: k must be strictly increasing");
    }
  }
  const auto n = static_cast<Eigen::Index>(points.size());
  const auto m = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd A(n, m);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y(i) = points[static_cast<size_t>(i)].second;
    for (Eigen::Index j = 0; j < m; ++j) {
      A(i, j) = basis[static_cast<size_t>(j)].eval(points[static_cast<size_t>(i)].first);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(m - 1) <= 0.0 || !std::isfinite(sv(0))) {
    throw std::runtime_error("fit_expansion: rank-deficient design matrix");
  }
  ExpansionFit out;
  out.condition_number = sv(0) / sv(m - 1);
  out.reliable = out.condition_number <= 1e10;
  Eigen::VectorXd c = svd.solve(y);
  out.residual_norm = (A * c - y).norm();
  for (Eigen::Index j = 0; j < m; ++j) {
    out.basis_names.push_back(basis[static_cast<size_t>(j)].name);
    out.coefficients.push_back(c(j));
  }
  return out;
}

}  // namespace gaussdef
