#include "eorlicz/extreal.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace eorlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Funnel for results of raw double arithmetic: +inf saturates, -inf and NaN
// are domain errors.
double sanitize(double v, const char* op) {
  if (std::isnan(v)) throw EvalError(std::string(op) + ": undefined form (NaN)");
  if (v == -kInf) throw EvalError(std::string(op) + ": result below extended-real range (-inf)");
  return v;
}

}  // namespace

ExtReal::ExtReal(double v) : v_(sanitize(v, "value")) {}

ExtReal ExtReal::infinity() {
  ExtReal r;
  r.v_ = kInf;
  return r;
}

bool ExtReal::is_inf() const { return v_ == kInf; }

ExtReal ExtReal::operator-() const {
  if (is_inf()) throw EvalError("negate: -inf is not representable");
  return ExtReal(-v_);
}

ExtReal operator+(ExtReal a, ExtReal b) {
  if (a.is_inf() || b.is_inf()) return ExtReal::infinity();
  return ExtReal(sanitize(a.v_ + b.v_, "add"));
}

ExtReal operator-(ExtReal a, ExtReal b) {
  if (b.is_inf()) {
    if (a.is_inf()) throw EvalError("subtract: inf - inf is undefined");
    throw EvalError("subtract: finite - inf is not representable");
  }
  if (a.is_inf()) return ExtReal::infinity();
  return ExtReal(sanitize(a.v_ - b.v_, "subtract"));
}

ExtReal operator*(ExtReal a, ExtReal b) {
  if (a.v_ == 0.0 || b.v_ == 0.0) return ExtReal(0.0);  // includes 0 * inf
  if (a.is_inf() || b.is_inf()) {
    ExtReal other = a.is_inf() ? b : a;
    if (other.v_ < 0.0) throw EvalError("multiply: negative * inf is not representable");
    return ExtReal::infinity();
  }
  return ExtReal(sanitize(a.v_ * b.v_, "multiply"));
}

ExtReal operator/(ExtReal a, ExtReal b) {
  if (a.is_inf() && b.is_inf()) throw EvalError("divide: inf / inf is undefined");
  if (b.is_inf()) return ExtReal(0.0);
  if (b.v_ == 0.0) {
    if (a.v_ == 0.0) throw EvalError("divide: 0 / 0 is undefined");
    if (a.v_ < 0.0) throw EvalError("divide: negative / 0 is not representable");
    return ExtReal::infinity();
  }
  if (a.is_inf()) {
    if (b.v_ < 0.0) throw EvalError("divide: inf / negative is not representable");
    return ExtReal::infinity();
  }
  return ExtReal(sanitize(a.v_ / b.v_, "divide"));
}

ExtReal pow(ExtReal base, ExtReal exponent) {
  // std::pow already matches the conventions here (0^0 = 1, inf handling) and
  // yields NaN exactly for fractional powers of negative bases.
  double r = std::pow(base.value(), exponent.value());
  if (std::isnan(r)) {
    throw EvalError("pow: fractional exponent on negative base");
  }
  return ExtReal(sanitize(r, "pow"));
}

ExtReal exp(ExtReal x) {
  if (x.is_inf()) return ExtReal::infinity();
  return ExtReal(sanitize(std::exp(x.value()), "exp"));
}

ExtReal ln(ExtReal x) {
  if (x.is_inf()) return ExtReal::infinity();
  if (x.value() <= 0.0) throw EvalError("ln: argument must be positive");
  return ExtReal(std::log(x.value()));
}

ExtReal sqrt(ExtReal x) {
  if (x.is_inf()) return ExtReal::infinity();
  if (x.value() < 0.0) throw EvalError("sqrt: negative argument");
  return ExtReal(std::sqrt(x.value()));
}

ExtReal cosh(ExtReal x) {
  if (x.is_inf()) return ExtReal::infinity();
  return ExtReal(sanitize(std::cosh(x.value()), "cosh"));
}

ExtReal abs(ExtReal x) {
  if (x.is_inf()) return ExtReal::infinity();
  return ExtReal(std::fabs(x.value()));
}

ExtReal min(ExtReal a, ExtReal b) { return a <= b ? a : b; }
ExtReal max(ExtReal a, ExtReal b) { return a >= b ? a : b; }

std::string to_string(ExtReal x) {
  if (x.is_inf()) return "inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x.value());
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace eorlicz
