#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace gaussdef {

// Signed number stored as (sign, log|x|). Every tail quantity in this
// library crosses module boundaries in this form: deficits are differences
// of large near-cancelling terms, and the o(exp) pieces (Gaussian tail
// masses at k ~ 40) underflow plain doubles long before they stop mattering
// for the bookkeeping.
class LogValue {
 public:
  constexpr LogValue() : lg_(-inf()), sign_(0) {}

  static constexpr LogValue zero() { return LogValue(); }
  static constexpr LogValue one() { return LogValue(0.0, +1); }

  static LogValue from_double(double x) {
    if (x == 0.0) return zero();
    return LogValue(std::log(std::fabs(x)), x > 0 ? +1 : -1);
  }

  // log|x| given directly; sign must be -1, 0 or +1.
  static constexpr LogValue from_log(double lg, int sign = +1) {
    if (sign == 0 || lg == -inf()) return zero();
    return LogValue(lg, sign);
  }

  double log_abs() const { return lg_; }
  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  // May overflow to +-inf or underflow to 0; that is the caller's problem.
  double value() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(lg_);
  }

  LogValue operator-() const { return LogValue(lg_, -sign_); }

  LogValue abs() const { return sign_ == 0 ? zero() : LogValue(lg_, +1); }

  friend LogValue operator*(const LogValue& a, const LogValue& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return zero();
    return LogValue(a.lg_ + b.lg_, a.sign_ * b.sign_);
  }

  friend LogValue operator/(const LogValue& a, const LogValue& b) {
    if (a.sign_ == 0) return zero();
    return LogValue(a.lg_ - b.lg_, a.sign_ * b.sign_);
  }

  friend LogValue operator+(const LogValue& a, const LogValue& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    const LogValue& hi = (a.lg_ >= b.lg_) ? a : b;
    const LogValue& lo = (a.lg_ >= b.lg_) ? b : a;
    const double d = lo.lg_ - hi.lg_;  // <= 0
    if (hi.sign_ == lo.sign_) {
      return LogValue(hi.lg_ + std::log1p(std::exp(d)), hi.sign_);
    }
    // opposite signs: |hi| - |lo|, result carries hi's sign
    const double m = log1mexp(d);
    if (m == -inf()) return zero();
    return LogValue(hi.lg_ + m, hi.sign_);
  }

  friend LogValue operator-(const LogValue& a, const LogValue& b) {
    return a + (-b);
  }

  LogValue& operator+=(const LogValue& o) { return *this = *this + o; }
  LogValue& operator-=(const LogValue& o) { return *this = *this - o; }
  LogValue& operator*=(const LogValue& o) { return *this = *this * o; }
  LogValue& operator/=(const LogValue& o) { return *this = *this / o; }

  // |x|^e for nonnegative x (or any x with integer-like usage left to caller)
  LogValue pow_abs(double e) const {
    if (sign_ == 0) return e == 0.0 ? one() : zero();
    return LogValue(lg_ * e, +1);
  }

  LogValue sqrt_abs() const { return pow_abs(0.5); }

  friend bool operator<(const LogValue& a, const LogValue& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    if (a.sign_ == 0) return false;
    return a.sign_ > 0 ? a.lg_ < b.lg_ : a.lg_ > b.lg_;
  }
  friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
  friend bool operator<=(const LogValue& a, const LogValue& b) { return !(b < a); }
  friend bool operator>=(const LogValue& a, const LogValue& b) { return !(a < b); }

  // log(1 - e^d) for d <= 0, accurate across the whole range
  static double log1mexp(double d) {
    if (d >= 0.0) return -inf();
    if (d < -0.6931471805599453) return std::log1p(-std::exp(d));
    return std::log(-std::expm1(d));
  }

 private:
  constexpr LogValue(double lg, int sign) : lg_(lg), sign_(static_cast<std::int8_t>(sign)) {}
  static constexpr double inf() { return std::numeric_limits<double>::infinity(); }

  double lg_;
  std::int8_t sign_;
};

// Stable signed sum: positive and negative parts are each accumulated with
// log-sum-exp before the single cancelling subtraction.
inline LogValue log_sum(std::span<const LogValue> xs) {
  double max_pos = -std::numeric_limits<double>::infinity();
  double max_neg = max_pos;
  for (const auto& x : xs) {
    if (x.sign() > 0) max_pos = std::max(max_pos, x.log_abs());
    if (x.sign() < 0) max_neg = std::max(max_neg, x.log_abs());
  }
  double acc_pos = 0.0, acc_neg = 0.0;
  for (const auto& x : xs) {
    if (x.sign() > 0) acc_pos += std::exp(x.log_abs() - max_pos);
    if (x.sign() < 0) acc_neg += std::exp(x.log_abs() - max_neg);
  }
  LogValue pos = acc_pos > 0 ? LogValue::from_log(max_pos + std::log(acc_pos), +1)
                             : LogValue::zero();
  LogValue neg = acc_neg > 0 ? LogValue::from_log(max_neg + std::log(acc_neg), -1)
                             : LogValue::zero();
  return pos + neg;
}

inline LogValue log_sum(const std::vector<LogValue>& xs) {
  return log_sum(std::span<const LogValue>(xs.data(), xs.size()));
}

}  // namespace gaussdef
