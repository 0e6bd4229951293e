#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaussdef/log_value.hpp"
#include "gaussdef/quadrature.hpp"

namespace gaussdef {

enum class PieceKind { Flat, Bridge, ExpTilt, Rational, GenericGrid };
enum class BridgeShape { Quintic, Cubic };
enum class Symmetry { Even, FullLine };

// Monotone decreasing value-space smoothstep joining (left, top) to
// (right, bottom). The quintic variant has sup |L'| = (15/8)(top-bottom)/width,
// inside the 2/width * (top-bottom) budget the construction allows.
struct BridgeSpec {
  double left = 0.0, right = 1.0;
  double top = 1.0, bottom = 0.5;
  BridgeShape shape = BridgeShape::Quintic;

  double width() const { return right - left; }
  double value(double x) const;
  double derivative(double x) const;
  double max_abs_slope() const;
};

struct Piece {
  PieceKind kind = PieceKind::Flat;
  double x0 = 0.0, x1 = 0.0;  // x1 may be +infinity on the final piece
  // parameter slots, meaning depends on kind:
  //   Flat:        log_v                (value e^{log_v})
  //   ExpTilt:     log_v = log r, b     (value r e^{b x - b^2/2})
  //   Rational:    log_v = log A       (value A e^{x^2/2} / (1 + x^2))
  //   Bridge:      bridge
  //   GenericGrid: grid_x, grid_logv   (linear interpolation of log f)
  double log_v = 0.0;
  double b = 0.0;
  BridgeSpec bridge;
  std::vector<double> grid_x, grid_logv;

  double log_value(double x) const;
  double dlog_value(double x) const;  // d/dx log f within the piece
  // log(f(x) gamma(x)) with the x^2/2 terms cancelled analytically; the
  // rational and tilt pieces would otherwise lose all precision at large x
  double log_weighted(double x) const;
};

// A density f with respect to the standard Gaussian measure, described as
// exact analytic pieces so that downstream functionals can use closed-form
// tail identities instead of quadrature of near-cancelling terms.
//
// Even symmetry means pieces describe [0, infinity) and f(-x) = f(x).
// Densities are immutable after construction and safe to share.
class PiecewiseLogDensity {
 public:
  PiecewiseLogDensity() = default;

  static PiecewiseLogDensity assemble(Symmetry sym, std::vector<Piece> pieces,
                                      double norm_base, LogValue norm_correction);

  Symmetry symmetry() const { return sym_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  // normalization: the L1(dgamma) norm of the raw piece description is
  // norm_base + norm_correction (the correction holds the o(exp) part that
  // plain doubles would round away); log_scale = -log of that norm.
  double norm_base() const { return norm_base_; }
  LogValue norm_correction() const { return norm_corr_; }
  double log_scale() const { return log_scale_; }

  // normalized density value, even-extended when symmetric
  LogValue evaluate(double x) const;
  // log and log-derivative of the *unnormalized* pieces at |x|
  double log_raw(double ax) const;
  double dlog_raw(double ax) const;
  const Piece& piece_at(double ax) const;

  // |int f dgamma - 1| by brute quadrature (test / validation hook)
  double normalization_defect(const QuadratureConfig& cfg = {}) const;

 private:
  Symmetry sym_ = Symmetry::Even;
  std::vector<Piece> pieces_;
  double norm_base_ = 1.0;
  LogValue norm_corr_ = LogValue::zero();
  double log_scale_ = 0.0;
};

struct BumpParams {
  double s = 0, t = 0, k = 0;
  double d = 0;   // bridge width 1/(2k)
  double b = 0;   // tilt frequency 2k
  double r = 0;   // bump height min(s k^-t, 1)/4
  double c = 0;   // normalization 1/||f~||_1
};

// flat core on [0, k-d], monotone bridge on (k-d, k], exponential tilt
// r e^{bx - b^2/2} beyond k; even extension; normalized
std::pair<PiecewiseLogDensity, BumpParams> make_bump_family(
    double s, double t, double k, BridgeShape shape = BridgeShape::Quintic);

// g_b(x) = e^{bx - b^2/2} on the whole line (already a probability density)
PiecewiseLogDensity make_shifted_gaussian(double b);

// Cauchy-type core sqrt(2 pi) e^{x^2/2} / (C_k pi (x^2+1)) on [0, k], frozen
// flat tail beyond; returns the normalizing constant C_k (-> 1 as k grows)
std::pair<PiecewiseLogDensity, double> make_heavytail_family(double k);

// tabulated log-density on [x0, xn] (linear interpolation of log f), zero
// beyond the table; normalized by quadrature
PiecewiseLogDensity make_generic_grid(std::vector<double> xs,
                                      std::vector<double> log_vals,
                                      Symmetry sym = Symmetry::Even);

// JSON piece-list serialization, 17 significant digits (fixture format)
std::string to_json_string(const PiecewiseLogDensity& d);
PiecewiseLogDensity density_from_json_string(const std::string& text);

}  // namespace gaussdef
