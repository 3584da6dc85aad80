#include "eorlicz/norms.hpp"

#include <cmath>
#include <string>

namespace eorlicz {

namespace {

constexpr double kLambdaCap = 1e12;
constexpr double kLambdaFloor = 1e-300;
constexpr int kMaxIterations = 200;

}  // namespace

Verdict check_monotone(const ComposedFunction& psi, std::span<const double> t_samples,
                       const CheckConfig& cfg) {
  int compared = 0;
  for (double t : t_samples) {
    ExtReal prev{0.0};
    double prev_u = 0.0;
    bool have_prev = false;
    for (std::size_t i = 0; i <= cfg.u_grid.size(); ++i) {
      double u = i == 0 ? 0.0 : cfg.u_grid[i - 1];
      ExtReal v{0.0};
      try {
        v = psi(t, u);
      } catch (const EvalError& err) {
        return Verdict::inconclusive("monotonicity: evaluation error at t=" +
                                     to_string(ExtReal(t)) + ", u=" + to_string(ExtReal(u)) +
                                     ": " + err.what());
      }
      if (have_prev) {
        bool ok;
        if (prev.is_inf()) {
          ok = v.is_inf();
        } else if (v.is_inf()) {
          ok = true;
        } else {
          double scale = std::max({1.0, std::fabs(prev.value()), std::fabs(v.value())});
          ok = v.value() >= prev.value() - cfg.tol_convex * scale;
        }
        if (!ok) {
          return Verdict::refuted("psi decreases in u",
                                  {ExtReal(t), ExtReal(prev_u), ExtReal(u), prev, v});
        }
        ++compared;
      }
      prev = v;
      prev_u = u;
      have_prev = true;
    }
  }
  return Verdict::certified("psi nondecreasing in u over " + std::to_string(compared) +
                            " grid steps at every t sample");
}

ModularValue modular(const ComposedFunction& psi, const MeasureSpace& m, const GridFunction& f) {
  if (f.size() != m.size()) {
    throw PreconditionError("grid function has " + std::to_string(f.size()) +
                            " values but the measure has " + std::to_string(m.size()) +
                            " nodes");
  }
  f.require_nonnegative("modular");
  ExtReal value =
      integrate_indexed(m, [&](std::size_t i, double t) { return psi(t, f[i]); });
  return ModularValue{value};
}

namespace {

// modular of f / lambda; nonincreasing in lambda for monotone psi. The
// division happens in extended-real arithmetic so a tiny lambda saturates to
// psi(t, +inf) instead of overflowing the grid.
ExtReal scaled_modular(const ComposedFunction& psi, const MeasureSpace& m, const GridFunction& f,
                       double lambda) {
  return integrate_indexed(m, [&](std::size_t i, double t) {
    return psi(ExtReal(t), ExtReal(f[i]) / ExtReal(lambda));
  });
}

}  // namespace

NormResult luxemburg_norm(const ComposedFunction& psi, const MeasureSpace& m,
                          const GridFunction& f, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  if (f.size() != m.size()) {
    throw PreconditionError("grid function has " + std::to_string(f.size()) +
                            " values but the measure has " + std::to_string(m.size()) +
                            " nodes");
  }
  f.require_nonnegative("luxemburg_norm");

  std::vector<double> node_ts;
  node_ts.reserve(m.size());
  for (const MeasureNode& n : m.nodes()) node_ts.push_back(n.t);
  CheckConfig cfg = CheckConfig::defaults();
  Verdict monotone = check_monotone(psi, node_ts, cfg);
  if (monotone.status != Status::kCertified) {
    std::string detail = monotone.evidence.empty() ? "" : monotone.evidence.front().description;
    std::string witness;
    if (!monotone.evidence.empty()) {
      for (ExtReal w : monotone.evidence.front().witness) {
        witness += (witness.empty() ? " [" : ", ") + to_string(w);
      }
      if (!witness.empty()) witness += "]";
    }
    std::string reason = monotone.status == Status::kRefuted
                             ? "composition decreases in u: "
                             : "monotonicity in u could not be certified: ";
    throw PreconditionError(reason + detail + witness);
  }

  NormResult result;
  if (f.all_zero()) {
    result.value = ExtReal(0.0);
    result.modular_at_value = modular(psi, m, f).value;
    return result;
  }

  int iterations = 0;
  auto h = [&](double lambda) {
    ++iterations;
    return scaled_modular(psi, m, f, lambda);
  };

  double lo = 1.0, hi = 1.0;
  if (h(1.0) <= ExtReal(1.0)) {
    // 1 is an upper bracket; halve until the modular exceeds 1.
    for (;;) {
      double next = lo / 2.0;
      if (next < kLambdaFloor) {
        // modular never exceeds 1: the infimum is 0.
        result.value = ExtReal(0.0);
        result.iterations = iterations;
        result.bracket = {0.0, hi};
        result.modular_at_value = scaled_modular(psi, m, f, hi);
        return result;
      }
      if (h(next) > ExtReal(1.0)) {
        lo = next;
        break;
      }
      lo = next;
      hi = next;
    }
  } else {
    // 1 is a lower bracket; double until the modular drops to 1 or below.
    for (;;) {
      double next = hi * 2.0;
      if (next > kLambdaCap) {
        result.value = ExtReal::infinity();
        result.iterations = iterations;
        result.bracket = {hi, next};
        result.modular_at_value = ExtReal::infinity();
        return result;
      }
      if (h(next) <= ExtReal(1.0)) {
        lo = hi;
        hi = next;
        break;
      }
      hi = next;
    }
  }

  // Invariant: h(hi) <= 1 < h(lo). Bisect, keep the feasible endpoint.
  while ((hi - lo) / hi > tol && iterations < kMaxIterations) {
    double mid = 0.5 * (lo + hi);
    if (h(mid) <= ExtReal(1.0)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.value = ExtReal(hi);
  result.iterations = iterations;
  result.bracket = {lo, hi};
  result.modular_at_value = scaled_modular(psi, m, f, hi);
  return result;
}

Verdict is_member(const ComposedFunction& psi, const MeasureSpace& m, const GridFunction& f) {
  double lambda = 1.0;
  while (lambda <= kLambdaCap) {
    ExtReal mod{0.0};
    try {
      mod = scaled_modular(psi, m, f, lambda);
    } catch (const EvalError& err) {
      return Verdict::inconclusive("modular not evaluable at lambda=" +
                                   to_string(ExtReal(lambda)) + ": " + err.what());
    }
    if (mod.is_finite()) {
      if (lambda == 1.0) {
        return Verdict::certified("modular(f) finite", {mod});
      }
      return Verdict::certified(
          "modular(f) = +inf but modular(f/lambda) finite at lambda=" +
              to_string(ExtReal(lambda)) + " (member via scaling)",
          {ExtReal(lambda), mod});
    }
    lambda *= 2.0;
  }
  return Verdict::refuted("modular(f/lambda) = +inf for every lambda up to 1e12",
                          {ExtReal(kLambdaCap)});
}

double lp_norm(double p, const MeasureSpace& m, const GridFunction& f) {
  if (!(p >= 1.0)) throw PreconditionError("lp_norm requires p >= 1");
  if (f.size() != m.size()) {
    throw PreconditionError("grid function has " + std::to_string(f.size()) +
                            " values but the measure has " + std::to_string(m.size()) +
                            " nodes");
  }
  f.require_nonnegative("lp_norm");
  auto nodes = m.nodes();
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    sum += nodes[i].w * std::pow(f[i], p);
  }
  return std::pow(sum, 1.0 / p);
}

}  // namespace eorlicz
