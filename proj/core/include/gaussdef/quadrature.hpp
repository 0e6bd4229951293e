#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussdef/log_value.hpp"

namespace gaussdef {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1) {
      throw std::invalid_argument("QuadratureConfig: abs_tol > 0, rel_tol > 0, "
                                  "max_subdivisions >= 1 required");
    }
  }
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceNotMet : QuadratureError {
  ToleranceNotMet(const std::string& msg, double value, double error)
      : QuadratureError(msg), value(value), error(error) {}
  double value;
  double error;
};

struct NonFiniteIntegrand : QuadratureError {
  using QuadratureError::QuadratureError;
};

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

struct LogIntegralResult {
  LogValue value;
  LogValue error;
  int subdivisions = 0;
};

// int_a^b f(x) dx, finite interval, adaptive Gauss-Kronrod 7/15
IntegralResult integrate_plain(const std::function<double(double)>& f, double a,
                               double b, const QuadratureConfig& cfg = {},
                               const std::vector<double>& breakpoints = {});

// int f dgamma over [a, b]; f supplied as a LogValue so that tilt factors
// like e^{bx - b^2/2} never overflow on their own. b may be +infinity and a
// may be -infinity (semi-infinite handled by substitution, with a dyadic
// initial partition so distant peaks are not missed).
IntegralResult integrate_gauss(const std::function<LogValue(double)>& f, double a,
                               double b, const QuadratureConfig& cfg = {},
                               const std::vector<double>& breakpoints = {});

// int e^{log_f(x)} dx accumulated entirely in the log domain; for
// nonnegative integrands whose scale exceeds double range. Domain may be
// semi-infinite on either side.
LogIntegralResult integrate_log_domain(const std::function<double(double)>& log_f,
                                       double a, double b,
                                       const QuadratureConfig& cfg = {},
                                       const std::vector<double>& breakpoints = {});

}  // namespace gaussdef
