#pragma once

#include <optional>
#include <vector>

#include "gaussdef/functionals.hpp"
#include "gaussdef/piecewise_density.hpp"

namespace gaussdef {

struct DivergentMoment : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CDF and quantile machinery for a piecewise density. Closed forms per
// piece (Phi differences, tilt identity, arctan) wherever they exist;
// bisection against cached quadrature on bridge / grid pieces. Immutable
// after construction and safe to share across threads.
class CdfEvaluator {
 public:
  explicit CdfEvaluator(const PiecewiseLogDensity& f,
                        const QuadratureConfig& cfg = {});

  double cdf(double x) const;
  // 1 - F(x) as a LogValue: exact arbitrarily deep in the tail
  LogValue cdf_complement_lv(double x) const;

  double quantile(double u) const;        // u in (0,1)
  // x such that 1 - F(x) = v; the tail-mass parameterization keeps full
  // precision where the transported bump mass lives
  double quantile_upper(double v) const;
  // x such that F(x) = w, parameterized from below (full-line densities)
  double quantile_lower(double w) const;

  const PiecewiseLogDensity& density() const { return *f_; }

 private:
  LogValue piece_mass(size_t i, double a, double b) const;
  double invert_from_top(size_t i, const LogValue& target) const;
  double invert_from_bottom(size_t i, const LogValue& target) const;

  const PiecewiseLogDensity* f_;
  QuadratureConfig cfg_;
  std::vector<LogValue> mass_;    // unnormalized gamma-mass per piece
  std::vector<LogValue> suffix_;  // mass_[i] + ... + mass_[n-1]
  std::vector<LogValue> prefix_;  // mass_[0] + ... + mass_[i-1]
  LogValue total_;
};

// monotone u -> F^{-1}(u) table on a fixed grid covering [1e-12, 1-1e-12];
// serialization and bracketing aid, the W_p integrals evaluate exact
// quantiles directly
struct QuantileTable {
  std::vector<double> u;
  std::vector<double> q;

  static QuantileTable build(const CdfEvaluator& ev, int n = 512);
  double interpolate(double uu) const;
};

struct WassersteinResult {
  double value = 0.0;
  double error = 0.0;
};

// W_p(mu, nu) through the monotone (quantile) coupling, exact in one
// dimension: (int_0^1 |F_mu^{-1} - F_nu^{-1}|^p du)^{1/p}. Dyadic panels
// toward both endpoints; the extreme tails enter through the closed-form
// piece inverses.
WassersteinResult wasserstein_p(const PiecewiseLogDensity& mu,
                                const PiecewiseLogDensity& nu, double p,
                                const QuadratureConfig& cfg = {});

WassersteinResult wasserstein_to_gauss(const PiecewiseLogDensity& mu, double p,
                                       const QuadratureConfig& cfg = {});

struct TalagrandResult {
  double deficit = 0.0;  // 2 H - W_2^2
  double entropy = 0.0;
  double w2sq = 0.0;
};

// both terms computed from the same density object in one pass
TalagrandResult talagrand_deficit(const PiecewiseLogDensity& mu,
                                  const QuadratureConfig& cfg = {});

struct TransportReport {
  double fisher = 0.0, entropy = 0.0, deficit = 0.0;
  double w2 = 0.0;
  double delta_tal = 0.0;
  double hwi_fisher_term = 0.0;     // (sqrt I - W2)^2 / 2
  double hwi_entropy_term = 0.0;    // (sqrt 2H - W2)^2 / 2
  std::optional<double> tal_term;   // delta_Tal^2 / (16 H), absent if H = 0
  bool ordering_ok = false;         // deficit >= t1 >= t2 >= t3 (1e-9 slack)
};

TransportReport hwi_chain(const PiecewiseLogDensity& mu,
                          const QuadratureConfig& cfg = {});

struct SandwichResult {
  bool ok = false;
  double lower = 0.0;  // 2^{1-p} m_p(mu) - m_p(gamma)   (p = 1: m_1 - m_1(gamma))
  double wpp = 0.0;    // W_p^p(mu, gamma)
  double upper = 0.0;  // 2^{p-1}(m_p(mu) + m_p(gamma))  (p = 1: m_1 + m_1(gamma))
};

SandwichResult moment_sandwich_check(const PiecewiseLogDensity& mu, double p,
                                     const QuadratureConfig& cfg = {});

}  // namespace gaussdef
