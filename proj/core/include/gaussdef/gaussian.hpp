#pragma once

#include <cmath>

#include "gaussdef/log_value.hpp"

namespace gaussdef {

inline constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log sqrt(2 pi)
inline constexpr double kSqrt2Pi = 2.5066282746310005024;
inline constexpr double kSqrt2 = 1.4142135623730950488;

// density of the standard Gaussian measure, (2 pi)^{-1/2} e^{-x^2/2}
inline double std_normal_log_pdf(double x) {
  if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
  return -0.5 * x * x - kLogSqrt2Pi;
}

inline double std_normal_pdf(double x) { return std::exp(std_normal_log_pdf(x)); }

inline LogValue std_normal_pdf_lv(double x) {
  return LogValue::from_log(std_normal_log_pdf(x));
}

// Phi(x), exact to double precision on the whole line
inline double std_normal_cdf(double x) {
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  if (x <= 0.0) return 0.5 * std::erfc(-x / kSqrt2);
  return 1.0 - 0.5 * std::erfc(x / kSqrt2);
}

// 1 - Phi(x) with full relative accuracy (underflows only past x ~ 37.6)
inline double std_normal_cdf_complement(double x) {
  if (std::isinf(x)) return x > 0 ? 0.0 : 1.0;
  return 0.5 * std::erfc(x / kSqrt2);
}

// log(1 - Phi(x)); Mills-ratio asymptotic series above x = 8, erfc below.
double std_normal_log_cdf_complement(double x);

inline LogValue std_normal_cdf_complement_lv(double x) {
  if (std::isinf(x) && x > 0) return LogValue::zero();
  return LogValue::from_log(std_normal_log_cdf_complement(x));
}

// Phi(b) - Phi(a) evaluated without cancellation for a <= b.
double std_normal_interval(double a, double b);
LogValue std_normal_interval_lv(double a, double b);

// Phi^{-1}(u) for u in (0,1)
double std_normal_quantile(double u);

// Quantile parameterized by the upper-tail mass: returns x with
// 1 - Phi(x) = v. Exact deep into the tail (v down to denormals).
double std_normal_quantile_upper(double v);

// m_p(gamma) = int |x|^p dgamma = 2^{p/2} Gamma((p+1)/2) / sqrt(pi), p >= 0
double gaussian_abs_moment(double p);

// m_p of the standard Gaussian on R^m (radial moment), m >= 0 integer
double gaussian_abs_moment_dim(double p, int m);

// M_p(a) = int_a^infty x^p dgamma for integer p >= 0 (signed integrand).
// Satisfies M_p(a) = a^{p-1} gamma(a) + (p-1) M_{p-2}(a).
LogValue incomplete_gaussian_moment(int p, double a);

// int_a^b x^p dgamma, same recurrence with boundary terms at both ends
LogValue incomplete_gaussian_moment_interval(int p, double a, double b);

}  // namespace gaussdef
