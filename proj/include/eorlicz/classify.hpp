#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eorlicz/compose.hpp"
#include "eorlicz/verdict.hpp"

namespace eorlicz {

/// The four function classes, ordered so that each implies the next:
/// kN => kStrongYoung => kOrlicz => kYoung.
enum class EClass { kN, kStrongYoung, kOrlicz, kYoung };
inline constexpr std::array<EClass, 4> kClassChain = {EClass::kN, EClass::kStrongYoung,
                                                      EClass::kOrlicz, EClass::kYoung};
const char* to_string(EClass c);
std::optional<EClass> eclass_from_string(const std::string& name);

// --- Per-condition checks, all at a fixed t sample. -------------------------
// Evaluation errors never escape: they turn the affected probe, and usually
// the verdict, inconclusive.

/// Midpoint convexity of u -> psi(t, u) on [0, inf): adjacent and skip-one
/// grid pairs, pairs anchored at u = 0, and 200 seeded random pairs. A +inf
/// right-hand side passes automatically.
Verdict check_convex(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// psi(t, u) == psi(t, -u) over the grid; inconclusive when the reflection is
/// outside the expression's domain.
Verdict check_even(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// psi(t, u) > 0 for every grid u > 0 (+inf counts as positive).
Verdict check_positive(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// psi(t, 0) == 0 within tol_convex.
Verdict check_zero_at_zero(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// lim_{u -> 0+} psi(t, u) / u == 0, by descending ladder.
Verdict check_ratio_limit_zero(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// lim_{u -> inf} psi(t, u) / u == +inf, by ascending ladder. Finite values
/// above 1e300 count as +inf.
Verdict check_ratio_limit_inf(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// psi(t, 0) == 0 and lim_{u -> 0+} psi(t, u) == 0.
Verdict check_value_limit_zero(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// lim_{u -> inf} psi(t, u) == +inf.
Verdict check_value_limit_inf(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// psi(t, u) == 0 exactly at u == 0: the zero-point and positivity checks
/// combined.
Verdict check_zero_iff_zero(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// Some grid u has 0 < psi(t, u) < inf (and psi is not identically +inf on
/// the positive axis). The literal all-u reading is recorded as a secondary
/// "strict" evidence entry.
Verdict check_nondegenerate(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// sup{u > 0 : psi(t, u) < inf}: +inf when the top of the grid is finite,
/// otherwise bisection on the finite/infinite boundary to 1e-9 absolute,
/// returning the upper (infinite-side) bracket endpoint.
ExtReal estimate_U_phi(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// inf{u > 0 : psi(t, u) > 0}: 0 when the smallest grid point is already
/// positive; +inf when no grid point is; else bisection to 1e-9 absolute.
ExtReal estimate_a_phi(const ComposedFunction& psi, double t, const CheckConfig& cfg);

/// Left continuity of u -> psi(t, u) at u_sup. u_sup = +inf is certified by
/// convention; a vanishing u_sup has no left neighborhood in [0, inf) and is
/// also certified. Otherwise the limit from below (shrinking-offset ladder,
/// floored well above the bisection tolerance) is compared with psi(t, u_sup).
Verdict check_left_continuity_at(const ComposedFunction& psi, double t, ExtReal u_sup,
                                 const CheckConfig& cfg);

// --- Aggregated classification. ---------------------------------------------

struct TSampleReport {
  double t = 0.0;
  /// Canonical condition order; keys are stable across runs.
  std::vector<std::pair<std::string, Verdict>> conditions;
  bool u_phi_known = false;
  ExtReal u_phi{0.0};
  bool a_phi_known = false;
  ExtReal a_phi{0.0};
  bool nondegenerate_strict = false;

  const Verdict& condition(const std::string& name) const;
};

struct ClassOutcome {
  Status status = Status::kInconclusive;
  std::vector<Status> per_t;
};

struct ClassificationReport {
  CheckConfig config;
  std::vector<TSampleReport> samples;
  std::array<ClassOutcome, 4> classes;  // indexed by static_cast<int>(EClass)
  /// False when a certified class has a refuted implied class (chain
  /// violation detected numerically).
  bool consistent = true;

  Status class_status(EClass c) const { return classes[static_cast<int>(c)].status; }
};

/// Names of the conditions each class requires, in report order.
const std::vector<std::string>& class_conditions(EClass c);

/// Runs every condition check at every t sample and aggregates: a class is
/// certified only if all of its conditions are certified at every sample,
/// refuted if any is refuted, inconclusive otherwise. Per-sample work may run
/// in parallel; assembly is in t order.
ClassificationReport classify(const ExprPtr& phi, const ExprPtr& e_t, const ExprPtr& e_u,
                              std::optional<double> p, const CheckConfig& cfg);

// --- Combinators. ------------------------------------------------------------

ExprPtr phi_sum(const ExprPtr& phi1, const ExprPtr& phi2);
ExprPtr phi_scale(const ExprPtr& phi, double c);  // requires c >= 0

struct EMap {
  ExprPtr e_t;
  ExprPtr e_u;
};
EMap e_sum(const EMap& e1, const EMap& e2);
EMap e_scale(const EMap& e, double c);  // requires c >= 0

}  // namespace eorlicz
