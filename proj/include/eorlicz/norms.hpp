#pragma once

#include <span>
#include <utility>

#include "eorlicz/compose.hpp"
#include "eorlicz/measure.hpp"
#include "eorlicz/verdict.hpp"

namespace eorlicz {

/// A caller handed a function outside an operation's contract (non-monotone
/// composition, misaligned grid, negative data, bad exponent).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct ModularValue {
  ExtReal value{0.0};
};

/// u -> psi(t, u) nondecreasing on the grid (including u = 0) at every given
/// t sample. This is the gate for the norm: without it the scaled modular is
/// not monotone in the scale and the infimum characterization breaks.
Verdict check_monotone(const ComposedFunction& psi, std::span<const double> t_samples,
                       const CheckConfig& cfg);

/// integral of psi(t, f(t)) over the measure. f must be aligned with m and
/// nonnegative; +inf at any positively weighted node makes the result +inf.
ModularValue modular(const ComposedFunction& psi, const MeasureSpace& m, const GridFunction& f);

struct NormResult {
  ExtReal value{0.0};
  int iterations = 0;
  std::pair<double, double> bracket{0.0, 0.0};
  ExtReal modular_at_value{0.0};
};

/// inf{lambda > 0 : modular(f / lambda) <= 1}, located by doubling/halving
/// from lambda = 1 and bisecting to relative width tol (capped at 200
/// iterations). The upper bracket endpoint is returned, so the reported value
/// always satisfies the modular bound. An all-zero f gives 0; if the modular
/// stays above 1 for every lambda up to 1e12 the norm is +inf.
/// Throws PreconditionError when check_monotone over the measure's node
/// coordinates does not certify.
NormResult luxemburg_norm(const ComposedFunction& psi, const MeasureSpace& m,
                          const GridFunction& f, double tol = 1e-10);

/// Membership of f in the space generated by psi: certified when some scaled
/// modular (lambda = 1, 2, 4, ... up to 1e12) is finite, refuted when all of
/// them are +inf, inconclusive when evaluation fails.
Verdict is_member(const ComposedFunction& psi, const MeasureSpace& m, const GridFunction& f);

/// (sum_i w_i f_i^p)^(1/p); the closed form the power norm reduces to.
double lp_norm(double p, const MeasureSpace& m, const GridFunction& f);

}  // namespace eorlicz
