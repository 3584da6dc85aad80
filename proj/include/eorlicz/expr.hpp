#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eorlicz/extreal.hpp"

namespace eorlicz {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST node for the scalar DSL over variables t, u and parameter p.
///
/// Grammar (ASCII):
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := '-' factor | power
///   power   := primary ('^' factor)?                       -- right associative
///   primary := number | 'inf' | 't' | 'u' | 'p'
///            | func '(' expr ')'                            -- exp ln log abs cosh sqrt
///            | ('min' | 'max') '(' expr ',' expr ')'
///            | 'piecewise' '(' cond ',' expr (',' cond ',' expr)* ',' expr ')'
///            | '(' expr ')'
///   cond    := expr cmp expr,  cmp in { < <= > >= = }
///
/// "log" is parsed as the natural logarithm (alias of "ln").
class Expr {
 public:
  enum class Kind { kLiteral, kInfinity, kVariable, kNegate, kBinary, kCall, kCompare, kPiecewise };
  enum class Var { kT, kU, kP };
  enum class BinOp { kAdd, kSub, kMul, kDiv, kPow };
  enum class CmpOp { kLt, kLe, kGt, kGe, kEq };
  enum class Func { kExp, kLn, kAbs, kCosh, kSqrt, kMin, kMax };

  Kind kind() const { return kind_; }
  double literal_value() const { return literal_; }
  Var variable() const { return var_; }
  BinOp bin_op() const { return bin_op_; }
  CmpOp cmp_op() const { return cmp_op_; }
  Func func() const { return func_; }
  const std::vector<ExprPtr>& children() const { return children_; }

  static ExprPtr literal(double v);  // requires v finite and >= 0
  static ExprPtr infinity();
  static ExprPtr variable(Var v);
  static ExprPtr negate(ExprPtr e);
  static ExprPtr binary(BinOp op, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr call(Func f, std::vector<ExprPtr> args);
  static ExprPtr compare(CmpOp op, ExprPtr lhs, ExprPtr rhs);
  /// parts = [cond0, value0, cond1, value1, ..., otherwise]; size odd, >= 3.
  static ExprPtr piecewise(std::vector<ExprPtr> parts);

 private:
  Expr() = default;

  Kind kind_ = Kind::kLiteral;
  double literal_ = 0.0;
  Var var_ = Var::kT;
  BinOp bin_op_ = BinOp::kAdd;
  CmpOp cmp_op_ = CmpOp::kLt;
  Func func_ = Func::kExp;
  std::vector<ExprPtr> children_;
};

/// Parse failure with the byte offset of the offending token and the set of
/// tokens that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message, std::string expected);
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Variable bindings for evaluation. t and u may carry +inf (a composed map
/// can feed infinite coordinates into the outer function); p is always finite.
struct Env {
  ExtReal t{0.0};
  ExtReal u{0.0};
  std::optional<double> p;
};

ExprPtr parse(std::string_view source);
std::string to_string(const Expr& e);
inline std::string to_string(const ExprPtr& e) { return to_string(*e); }

/// Deterministic evaluation over extended reals; piecewise takes the first
/// branch whose condition holds. Throws EvalError for domain errors and for
/// unbound p.
ExtReal eval(const Expr& e, const Env& env);
inline ExtReal eval(const ExprPtr& e, const Env& env) { return eval(*e, env); }

bool structurally_equal(const Expr& a, const Expr& b);
inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  return structurally_equal(*a, *b);
}

}  // namespace eorlicz
