#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gaussdef {

struct BasisFunction {
  std::string name;
  std::function<double(double)> eval;
};

// the asymptotic model pieces the family expansions are fitted against
BasisFunction basis_kt_log(double t);        // k^{-t} log k
BasisFunction basis_kt(double t);            // k^{-t}
BasisFunction basis_k_pow(double e);         // k^{e}
BasisFunction basis_const();                 // 1

struct ExpansionFit {
  std::vector<std::string> basis_names;
  std::vector<double> coefficients;
  double residual_norm = 0.0;
  double condition_number = 0.0;
  // condition numbers past 1e10 flag the coefficients as untrustworthy
  // instead of returning them silently
  bool reliable = true;

  double coefficient(const std::string& name) const;
};

// ordinary least squares of value ~ sum_j c_j basis_j(k); requires at least
// basis.size() + 2 points and strictly increasing k
ExpansionFit fit_expansion(const std::vector<std::pair<double, double>>& points,
                           const std::vector<BasisFunction>& basis);

}  // namespace gaussdef
