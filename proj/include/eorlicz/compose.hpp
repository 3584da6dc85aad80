#pragma once

#include <optional>
#include <utility>

#include "eorlicz/expr.hpp"

namespace eorlicz {

/// The composed map psi(t, u) = phi(e_t(t, u), e_u(t, u)). The inner pair is
/// evaluated first and its extended-real results are bound to phi's t and u;
/// no textual substitution happens. Immutable; evaluation is pure.
class ComposedFunction {
 public:
  ComposedFunction(ExprPtr phi, ExprPtr e_t, ExprPtr e_u, std::optional<double> p = std::nullopt)
      : phi_(std::move(phi)), e_t_(std::move(e_t)), e_u_(std::move(e_u)), p_(p) {}

  /// Throws EvalError tagged with the stage ("inner E" / "outer Phi") that failed.
  ExtReal operator()(ExtReal t, ExtReal u) const {
    ExtReal inner_t{0.0};
    ExtReal inner_u{0.0};
    try {
      Env inner{t, u, p_};
      inner_t = eval(*e_t_, inner);
      inner_u = eval(*e_u_, inner);
    } catch (const EvalError& err) {
      throw EvalError(std::string("inner E: ") + err.what());
    }
    try {
      Env outer{inner_t, inner_u, p_};
      return eval(*phi_, outer);
    } catch (const EvalError& err) {
      throw EvalError(std::string("outer Phi: ") + err.what());
    }
  }
  ExtReal operator()(double t, double u) const { return (*this)(ExtReal(t), ExtReal(u)); }

  const ExprPtr& phi() const { return phi_; }
  const ExprPtr& e_t() const { return e_t_; }
  const ExprPtr& e_u() const { return e_u_; }
  std::optional<double> param() const { return p_; }

 private:
  ExprPtr phi_, e_t_, e_u_;
  std::optional<double> p_;
};

inline ComposedFunction compose(ExprPtr phi, ExprPtr e_t, ExprPtr e_u,
                                std::optional<double> p = std::nullopt) {
  return ComposedFunction(std::move(phi), std::move(e_t), std::move(e_u), p);
}

/// E = identity: (t, u) -> (t, u).
inline std::pair<ExprPtr, ExprPtr> identity_map() {
  return {Expr::variable(Expr::Var::kT), Expr::variable(Expr::Var::kU)};
}

}  // namespace eorlicz
