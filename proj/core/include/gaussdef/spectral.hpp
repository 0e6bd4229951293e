#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gaussdef/piecewise_density.hpp"

namespace gaussdef {

// the reference Gaussian g(x) = 2^{1/4} e^{-pi x^2}: L^2-normalized and
// self-dual under the e^{-2 pi i x xi} transform convention
inline double log_g(double x) { return 0.25 * std::log(2.0) - M_PI * x * x; }

struct OptimizerParams {
  double a = M_PI;
  double r = 0.0;
};

// G_{a,r}(x) = (2a/pi)^{1/4} e^{-a (x-r)^2}
LogValue optimizer_eval(const OptimizerParams& g, double x);

// an evaluable |h| with a certified window: half_width(eps) returns X such
// that the h^2 mass outside [-X, X] is provably below eps
struct ProfileFunction {
  std::function<double(double)> log_h;
  std::function<double(double)> half_width;
  std::vector<double> hints;  // structure points (piece boundaries, bump center)
};

// h(x) = sqrt(f(2 sqrt(pi) x)) g(x); ||h||_2 = int f dgamma = 1 by the
// change of variables, and the certified window comes from the density's
// closed-form tail masses
ProfileFunction transformed_profile(const PiecewiseLogDensity& f);

ProfileFunction gaussian_profile(const OptimizerParams& g);

struct SpectralOptions {
  size_t n_init = size_t{1} << 16;
  size_t n_max = size_t{1} << 18;
  double stability_tol = 5e-7;  // entropy change across an N-doubling
  double tail_eps = 1e-12;      // certified h^2 mass outside the window
};

// sampled h and its continuous-convention Fourier transform on the dual
// grid; immutable after construction
struct SpectralProfile {
  double x0 = 0.0, dx = 0.0;
  size_t n = 0;       // power of two
  double dxi = 0.0;   // 1 / (n dx)
  std::vector<double> h;                    // renormalized samples
  std::vector<double> xi;                   // ascending dual grid
  std::vector<std::complex<double>> hhat;   // hhat(xi_m)
  double plancherel_defect = 0.0;
  double richardson = 0.0;   // entropy change on the last N-doubling
  double tail_bound = 0.0;

  double entropy_x() const;         // S(|h|^2)
  double entropy_xi() const;        // S(|hhat|^2)
  double second_moment_xi() const;  // int xi^2 |hhat|^2 dxi
};

SpectralProfile build_profile(const ProfileFunction& f,
                              const SpectralOptions& opts = {});

// -int v log v dx by the trapezoid rule with 0 log 0 := 0; samples more
// negative than -1e-12 are an error
double shannon_entropy(const std::vector<double>& density, double dx);

// S(|h|^2) + S(|hhat|^2) - (1 - log 2)
double bhi_deficit(const SpectralProfile& p);

// int |W f|^2 log |W f|^2 dm computed from the spectral profile of h = u_f g,
// where W is the Fourier-Wiener transform and dm = g^2 dx
double fourier_wiener_remainder(const SpectralProfile& p);

struct DeficitTransformIdentity {
  double deficit = 0.0;    // delta(f), from the functional side
  double remainder = 0.0;  // Fourier-Wiener remainder, from the spectral side
  double bhi = 0.0;        // delta_BH(h_f)
  double residual = 0.0;   // deficit - remainder - bhi
};

DeficitTransformIdentity deficit_transform_identity(
    const PiecewiseLogDensity& f, const SpectralOptions& opts = {},
    const QuadratureConfig& cfg = {});

// CSV export (x, h, Re hhat, Im hhat per row) and JSON grid metadata
void write_profile_csv(const SpectralProfile& p, std::ostream& os);
std::string profile_metadata_json(const SpectralProfile& p);

}  // namespace gaussdef
