#pragma once

#include <stdexcept>
#include <string>

namespace eorlicz {

/// Raised when an evaluation leaves the extended-real domain: NaN-producing
/// forms (0/0, inf - inf), anything that would need -inf, ln of a nonpositive
/// finite value, fractional powers of negative bases.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// A finite double or +inf, totally ordered. -inf and NaN are unrepresentable;
/// operations that would produce them throw EvalError instead. Conventions:
///   x + inf = inf,  c * inf = inf (c > 0),  0 * inf = 0,
///   x / inf = 0,    x / 0 = inf (x > 0),    0 ^ 0 = 1.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(double v);  // NOLINT(google-explicit-constructor)
  static ExtReal infinity();

  bool is_inf() const;
  bool is_finite() const { return !is_inf(); }
  /// Raw payload; +inf when is_inf().
  double value() const { return v_; }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

  ExtReal operator-() const;
  friend ExtReal operator+(ExtReal a, ExtReal b);
  friend ExtReal operator-(ExtReal a, ExtReal b);
  friend ExtReal operator*(ExtReal a, ExtReal b);
  friend ExtReal operator/(ExtReal a, ExtReal b);
  ExtReal& operator+=(ExtReal o) { return *this = *this + o; }

 private:
  double v_ = 0.0;
};

ExtReal pow(ExtReal base, ExtReal exponent);
ExtReal exp(ExtReal x);
ExtReal ln(ExtReal x);
ExtReal sqrt(ExtReal x);
ExtReal cosh(ExtReal x);
ExtReal abs(ExtReal x);
ExtReal min(ExtReal a, ExtReal b);
ExtReal max(ExtReal a, ExtReal b);

/// "inf" or the shortest decimal that round-trips the double.
std::string to_string(ExtReal x);

}  // namespace eorlicz
