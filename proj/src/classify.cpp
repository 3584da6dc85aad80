#include "eorlicz/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "eorlicz/parallel.hpp"

namespace eorlicz {

namespace {

// Finite doubles beyond this are indistinguishable from +inf at the scales
// the checks operate on; the same cap is used everywhere so the finiteness
// boundary, the limit checks, and the left-continuity probe agree.
constexpr double kOverflowCap = 1e300;
// Relative spread under which a ladder tail counts as converged.
constexpr double kStabilizeRel = 1e-6;
// Values beyond this just below a finiteness boundary mark the boundary as a
// float-overflow artifact rather than a genuine jump.
constexpr double kSoftBoundary = 1e100;
// Below this u, a function value of exactly 0 may be pure cancellation noise:
// exp(u^3) - 1 evaluates to 0 for u^3 under machine epsilon, i.e. u < ~5e-6.
constexpr double kCancellationFloor = 1e-4;
// Absolute bisection tolerance for the finiteness/positivity boundaries.
constexpr double kBisectTol = 1e-9;
constexpr int kTailLength = 10;
constexpr int kRandomConvexPairs = 200;
constexpr std::uint64_t kConvexPairSeed = 0x1d872b41UL;

bool effectively_infinite(ExtReal x) { return x.is_inf() || x.value() > kOverflowCap; }

struct Probe {
  bool ok = false;
  ExtReal value{0.0};
  std::string error;
};

Probe probe(const ComposedFunction& psi, double t, double u) {
  Probe r;
  try {
    r.value = psi(t, u);
    r.ok = true;
  } catch (const EvalError& err) {
    r.error = err.what();
  }
  return r;
}

double magnitude_scale(std::initializer_list<ExtReal> values) {
  double s = 1.0;
  for (ExtReal v : values) {
    if (v.is_finite()) s = std::max(s, std::fabs(v.value()));
  }
  return s;
}

// --- ladder analysis ---------------------------------------------------------

enum class LimitTarget { kZero, kInfinity };

struct Rung {
  double u;
  ExtReal value;
};

// Examines the last kTailLength rungs of a ladder prefix. Verdicts from
// shallow prefixes matter: deep descending rungs are dominated by float
// cancellation, so the first decisive tail wins. The "tail is not growing"
// refutation needs the full ladder (a convex dip may still turn upward).
Verdict analyze_tail(const std::vector<Rung>& rungs, LimitTarget target,
                     const CheckConfig& cfg, const char* what, bool full_depth) {
  std::size_t tail_begin = rungs.size() - kTailLength;

  if (target == LimitTarget::kInfinity) {
    double lo = rungs[tail_begin].value.value(), hi = lo, sum = 0.0;
    bool nondecreasing = true, nonincreasing = true;
    for (std::size_t i = tail_begin; i < rungs.size(); ++i) {
      double v = rungs[i].value.value();
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
      if (i > tail_begin) {
        double prev = rungs[i - 1].value.value();
        if (v < prev) nondecreasing = false;
        if (v > prev) nonincreasing = false;
      }
    }
    double mean = sum / kTailLength;
    double last = rungs.back().value.value();
    if (hi - lo <= kStabilizeRel * std::max(1.0, std::fabs(mean))) {
      return Verdict::refuted(std::string(what) + ": stabilizes at a finite level",
                              {ExtReal(rungs.back().u), ExtReal(mean)});
    }
    if (nondecreasing && last > cfg.big_m) {
      return Verdict::certified(std::string(what) + ": increasing beyond big_M",
                                {ExtReal(rungs.back().u), ExtReal(last)});
    }
    if (full_depth && nonincreasing) {
      return Verdict::refuted(std::string(what) + ": tail is not growing",
                              {ExtReal(rungs.back().u), ExtReal(last)});
    }
    return Verdict::inconclusive(std::string(what) + ": tail neither stabilizes nor grows",
                                 {ExtReal(rungs.back().u), ExtReal(last)});
  }

  // target == kZero
  int infinite_in_tail = 0;
  for (std::size_t i = tail_begin; i < rungs.size(); ++i) {
    if (effectively_infinite(rungs[i].value)) ++infinite_in_tail;
  }
  if (infinite_in_tail == kTailLength) {
    return Verdict::refuted(std::string(what) + ": diverges approaching the limit point",
                            {ExtReal(rungs.back().u)});
  }
  if (infinite_in_tail > 0) {
    // Infinite rungs on the far side of the window; wait for a clean tail.
    return Verdict::inconclusive(std::string(what) + ": mixed finite/infinite tail");
  }
  double lo = rungs[tail_begin].value.value(), hi = lo, sum = 0.0;
  bool abs_nonincreasing = true, abs_nondecreasing = true;
  for (std::size_t i = tail_begin; i < rungs.size(); ++i) {
    double v = rungs[i].value.value();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
    if (i > tail_begin) {
      double prev = std::fabs(rungs[i - 1].value.value());
      double cur = std::fabs(v);
      if (cur > prev * (1.0 + 1e-12)) abs_nonincreasing = false;
      if (cur < prev * (1.0 - 1e-12)) abs_nondecreasing = false;
    }
  }
  double mean = sum / kTailLength;
  double last_abs = std::fabs(rungs.back().value.value());
  if (abs_nonincreasing && last_abs < cfg.tol_zero_limit) {
    return Verdict::certified(std::string(what) + ": decreasing below tol_zero_limit",
                              {ExtReal(rungs.back().u), rungs.back().value});
  }
  if (hi - lo <= kStabilizeRel * std::max(1.0, std::fabs(mean)) &&
      std::fabs(mean) > cfg.tol_zero_limit) {
    return Verdict::refuted(std::string(what) + ": stabilizes at a nonzero level",
                            {ExtReal(rungs.back().u), ExtReal(mean)});
  }
  if (abs_nondecreasing && last_abs > cfg.big_m) {
    return Verdict::refuted(std::string(what) + ": diverges approaching the limit point",
                            {ExtReal(rungs.back().u), rungs.back().value});
  }
  return Verdict::inconclusive(std::string(what) + ": no stable trend",
                               {ExtReal(rungs.back().u), rungs.back().value});
}

// Walks u_k = ratio^(+-k), k = 0..max_ladder, applying map(u, psi(t,u)),
// taking the first decisive tail verdict.
template <class Map>
Verdict ladder_check(const ComposedFunction& psi, double t, const CheckConfig& cfg,
                     bool descending, LimitTarget target, const char* what, Map&& map) {
  std::vector<Rung> rungs;
  rungs.reserve(cfg.max_ladder + 1);
  std::string eval_error;
  double u = 1.0;
  for (int k = 0; k <= cfg.max_ladder; ++k) {
    Probe pr = probe(psi, t, u);
    if (!pr.ok) {
      eval_error = "evaluation error at u=" + to_string(ExtReal(u)) + ": " + pr.error;
      break;
    }
    ExtReal mapped{0.0};
    try {
      mapped = map(u, pr.value);
    } catch (const EvalError& err) {
      eval_error = err.what();
      break;
    }
    if (target == LimitTarget::kInfinity && effectively_infinite(mapped)) {
      return Verdict::certified(std::string(what) + ": reaches +inf at finite u",
                                {ExtReal(u)});
    }
    rungs.push_back({u, mapped});
    u = descending ? u / cfg.ladder_ratio : u * cfg.ladder_ratio;
  }

  Verdict last = Verdict::inconclusive(std::string(what) + ": ladder too short");
  for (std::size_t depth = kTailLength; depth <= rungs.size(); ++depth) {
    std::vector<Rung> prefix(rungs.begin(), rungs.begin() + depth);
    bool full = eval_error.empty() && depth == rungs.size();
    last = analyze_tail(prefix, target, cfg, what, full);
    if (last.status != Status::kInconclusive) return last;
  }
  if (!eval_error.empty()) last.add(std::string(what) + ": " + eval_error);
  return last;
}

struct NondegenerateResult {
  Verdict verdict;
  bool strict = false;
};

NondegenerateResult nondegenerate_impl(const ComposedFunction& psi, double t,
                                       const CheckConfig& cfg) {
  bool found_intermediate = false;
  double witness_u = 0.0;
  bool all_infinite = true;
  bool strict = true;
  int zero_count = 0, negative_count = 0, infinite_count = 0;
  for (double u : cfg.u_grid) {
    Probe pr = probe(psi, t, u);
    if (!pr.ok) {
      return {Verdict::inconclusive("nondegeneracy: evaluation error at u=" +
                                    to_string(ExtReal(u)) + ": " + pr.error),
              false};
    }
    if (effectively_infinite(pr.value)) {
      ++infinite_count;
      strict = false;
      continue;
    }
    all_infinite = false;
    double v = pr.value.value();
    if (v > 0.0) {
      if (!found_intermediate) witness_u = u;
      found_intermediate = true;
    } else {
      strict = false;
      if (v == 0.0) ++zero_count;
      else ++negative_count;
    }
  }
  NondegenerateResult out;
  out.strict = strict;
  if (found_intermediate && !all_infinite) {
    out.verdict = Verdict::certified("some grid value is strictly between 0 and +inf",
                                     {ExtReal(witness_u)});
  } else {
    out.verdict = Verdict::refuted(
        "no grid value lies strictly between 0 and +inf",
        {ExtReal(static_cast<double>(zero_count)), ExtReal(static_cast<double>(negative_count)),
         ExtReal(static_cast<double>(infinite_count))});
    out.verdict.evidence.back().description +=
        " (counts: zero=" + std::to_string(zero_count) +
        ", negative=" + std::to_string(negative_count) +
        ", infinite=" + std::to_string(infinite_count) + ")";
  }
  out.verdict.add(std::string("strict all-u reading: ") + (strict ? "holds" : "fails"));
  return out;
}

}  // namespace

const char* to_string(EClass c) {
  switch (c) {
    case EClass::kN: return "E-N";
    case EClass::kStrongYoung: return "E-strong-Young";
    case EClass::kOrlicz: return "E-Orlicz";
    case EClass::kYoung: return "E-Young";
  }
  return "?";
}

std::optional<EClass> eclass_from_string(const std::string& name) {
  for (EClass c : kClassChain) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Verdict check_convex(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  const auto& grid = cfg.u_grid;
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(grid.size() * 3 + kRandomConvexPairs);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) pairs.emplace_back(grid[i], grid[i + 1]);
  for (std::size_t i = 0; i + 2 < grid.size(); ++i) pairs.emplace_back(grid[i], grid[i + 2]);
  for (double u : grid) pairs.emplace_back(0.0, u);
  std::mt19937_64 rng(kConvexPairSeed);
  std::uniform_real_distribution<double> log_u(std::log(grid.front()), std::log(grid.back()));
  for (int i = 0; i < kRandomConvexPairs; ++i) {
    double a = std::exp(log_u(rng));
    double b = std::exp(log_u(rng));
    if (a == b) continue;
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }

  int checked = 0;
  int skipped = 0;
  std::string first_error;
  for (const auto& [a, b] : pairs) {
    Probe pa = probe(psi, t, a);
    Probe pb = probe(psi, t, b);
    double mid = 0.5 * (a + b);
    Probe pm = probe(psi, t, mid);
    if (!pa.ok || !pb.ok || !pm.ok) {
      ++skipped;
      if (first_error.empty()) {
        first_error = !pa.ok ? pa.error : (!pb.ok ? pb.error : pm.error);
      }
      continue;
    }
    ExtReal rhs{0.0};
    bool rhs_ok = true;
    try {
      rhs = (pa.value + pb.value) / ExtReal(2.0);
    } catch (const EvalError&) {
      rhs_ok = false;
    }
    if (!rhs_ok) {
      ++skipped;
      continue;
    }
    if (rhs.is_inf()) {
      ++checked;  // +inf majorizes everything
      continue;
    }
    if (pm.value.is_inf()) {
      return Verdict::refuted("midpoint value +inf between finite endpoints",
                              {ExtReal(a), ExtReal(b), ExtReal(mid), pa.value, pb.value});
    }
    double scale = magnitude_scale({pm.value, rhs});
    if (pm.value.value() > rhs.value() + cfg.tol_convex * scale) {
      return Verdict::refuted(
          "midpoint inequality violated: psi((u1+u2)/2) > (psi(u1)+psi(u2))/2",
          {ExtReal(a), ExtReal(b), ExtReal(mid), pm.value, rhs});
    }
    ++checked;
  }
  if (skipped > 0) {
    return Verdict::inconclusive("convexity: " + std::to_string(skipped) +
                                 " of " + std::to_string(checked + skipped) +
                                 " probe pairs could not be evaluated (" + first_error + ")");
  }
  return Verdict::certified("midpoint inequality holds on " + std::to_string(checked) +
                            " pairs at tol_convex=" + to_string(ExtReal(cfg.tol_convex)));
}

Verdict check_even(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  int compared = 0;
  int skipped = 0;
  std::string first_error;
  for (double u : cfg.u_grid) {
    Probe plus = probe(psi, t, u);
    Probe minus = probe(psi, t, -u);
    if (!plus.ok || !minus.ok) {
      ++skipped;
      if (first_error.empty()) first_error = plus.ok ? minus.error : plus.error;
      continue;
    }
    if (plus.value.is_inf() != minus.value.is_inf()) {
      return Verdict::refuted("psi(t,u) != psi(t,-u)", {ExtReal(u), plus.value, minus.value});
    }
    if (plus.value.is_finite()) {
      double scale = magnitude_scale({plus.value, minus.value});
      if (std::fabs(plus.value.value() - minus.value.value()) > cfg.tol_convex * scale) {
        return Verdict::refuted("psi(t,u) != psi(t,-u)", {ExtReal(u), plus.value, minus.value});
      }
    }
    ++compared;
  }
  if (skipped > 0) {
    return Verdict::inconclusive(
        "evenness: reflection not evaluable at " + std::to_string(skipped) + " of " +
        std::to_string(compared + skipped) + " grid points (" + first_error + ")");
  }
  return Verdict::certified("psi(t,u) == psi(t,-u) on " + std::to_string(compared) +
                            " grid points");
}

Verdict check_positive(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  int skipped = 0;
  int noise_zeros = 0;
  std::string first_error;
  double min_value = std::numeric_limits<double>::infinity();
  for (double u : cfg.u_grid) {
    Probe pr = probe(psi, t, u);
    if (!pr.ok) {
      ++skipped;
      if (first_error.empty()) first_error = pr.error;
      continue;
    }
    if (pr.value.is_inf()) continue;
    double v = pr.value.value();
    // A tiny positive function is indistinguishable from zero below the
    // cancellation floor (cosh(u) - 1 at u = 1e-8 evaluates to exactly 0);
    // only larger u can refute with a zero. Genuine negatives always refute.
    if (v < -cfg.tol_convex || (v <= 0.0 && u >= kCancellationFloor)) {
      return Verdict::refuted("psi(t,u) <= 0 at positive u", {ExtReal(u), pr.value});
    }
    if (v <= 0.0) {
      ++noise_zeros;
      continue;
    }
    min_value = std::min(min_value, v);
  }
  if (skipped > 0) {
    return Verdict::inconclusive("positivity: " + std::to_string(skipped) +
                                 " grid points not evaluable (" + first_error + ")");
  }
  Verdict out = Verdict::certified("psi > 0 on the whole grid; smallest value " +
                                   to_string(ExtReal(min_value)));
  if (noise_zeros > 0) {
    out.add("positivity: " + std::to_string(noise_zeros) +
            " sub-floor grid points evaluate to zero (cancellation)");
  }
  return out;
}

Verdict check_zero_at_zero(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  Probe pr = probe(psi, t, 0.0);
  if (!pr.ok) {
    return Verdict::inconclusive("psi(t,0) not evaluable: " + pr.error);
  }
  if (pr.value.is_finite() && std::fabs(pr.value.value()) <= cfg.tol_convex) {
    return Verdict::certified("psi(t,0) == 0 within tol_convex", {pr.value});
  }
  return Verdict::refuted("psi(t,0) != 0", {pr.value});
}

Verdict check_ratio_limit_zero(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  return ladder_check(psi, t, cfg, /*descending=*/true, LimitTarget::kZero,
                      "ratio psi(t,u)/u near 0",
                      [](double u, ExtReal v) { return v / ExtReal(u); });
}

Verdict check_ratio_limit_inf(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  return ladder_check(psi, t, cfg, /*descending=*/false, LimitTarget::kInfinity,
                      "ratio psi(t,u)/u at large u",
                      [](double u, ExtReal v) { return v / ExtReal(u); });
}

Verdict check_value_limit_zero(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  Verdict at_zero = check_zero_at_zero(psi, t, cfg);
  Verdict limit = ladder_check(psi, t, cfg, /*descending=*/true, LimitTarget::kZero,
                               "psi(t,u) near 0", [](double, ExtReal v) { return v; });
  return combine(at_zero, limit);
}

Verdict check_value_limit_inf(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  return ladder_check(psi, t, cfg, /*descending=*/false, LimitTarget::kInfinity,
                      "psi(t,u) at large u", [](double, ExtReal v) { return v; });
}

Verdict check_zero_iff_zero(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  return combine(check_zero_at_zero(psi, t, cfg), check_positive(psi, t, cfg));
}

Verdict check_nondegenerate(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  return nondegenerate_impl(psi, t, cfg).verdict;
}

ExtReal estimate_U_phi(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  auto infinite_at = [&](double u) { return effectively_infinite(psi(t, u)); };
  const auto& grid = cfg.u_grid;
  if (!infinite_at(grid.back())) return ExtReal::infinity();
  // Largest grid point that is still finite; everything above it is infinite.
  std::size_t last_finite = grid.size();
  for (std::size_t i = grid.size(); i-- > 0;) {
    if (!infinite_at(grid[i])) {
      last_finite = i;
      break;
    }
  }
  double lo = last_finite == grid.size() ? 0.0 : grid[last_finite];
  double hi = last_finite == grid.size() ? grid.front() : grid[last_finite + 1];
  for (int i = 0; i < 200 && hi - lo > kBisectTol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (infinite_at(mid)) hi = mid;
    else lo = mid;
  }
  // A genuine jump to +inf has moderate values just below the boundary; a
  // double-overflow crossing has astronomically large ones and means the
  // function grows without bound, i.e. the true boundary is +inf.
  try {
    ExtReal below = psi(t, lo);
    if (below.is_inf() || below.value() > kSoftBoundary) return ExtReal::infinity();
  } catch (const EvalError&) {
    // keep the bracket endpoint
  }
  return ExtReal(hi);
}

ExtReal estimate_a_phi(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  auto positive_at = [&](double u) {
    ExtReal v = psi(t, u);
    return v.is_inf() || v.value() > 0.0;
  };
  std::size_t first_pos = cfg.u_grid.size();
  for (std::size_t i = 0; i < cfg.u_grid.size(); ++i) {
    if (positive_at(cfg.u_grid[i])) {
      first_pos = i;
      break;
    }
  }
  if (first_pos == cfg.u_grid.size()) return ExtReal::infinity();
  if (first_pos == 0) return ExtReal(0.0);
  double lo = cfg.u_grid[first_pos - 1];
  double hi = cfg.u_grid[first_pos];
  for (int i = 0; i < 200 && hi - lo > kBisectTol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (positive_at(mid)) hi = mid;
    else lo = mid;
  }
  return ExtReal(hi);
}

Verdict check_left_continuity_at(const ComposedFunction& psi, double t, ExtReal u_sup,
                                 const CheckConfig& cfg) {
  if (u_sup.is_inf()) {
    return Verdict::certified("left continuous at U = +inf by convention");
  }
  double u = u_sup.value();
  if (u <= 1e-300) {
    return Verdict::certified("U == 0: no left neighborhood in [0, inf)");
  }
  double scale_u = std::max(1.0, u);
  // The probe offsets stay well above the bisection tolerance so an estimated
  // U never puts ladder points on the wrong side of a jump.
  double delta_min = std::max(1e-6 * scale_u, 4.0 * kBisectTol);
  Probe at_u = probe(psi, t, u);
  if (!at_u.ok) {
    return Verdict::inconclusive("psi(t,U) not evaluable: " + at_u.error);
  }

  std::vector<Probe> ladder;
  for (double delta = u / 4.0; delta >= delta_min; delta /= 2.0) {
    ladder.push_back(probe(psi, t, u - delta));
  }
  if (ladder.empty()) ladder.push_back(probe(psi, t, u / 2.0));
  for (const Probe& pr : ladder) {
    if (!pr.ok) {
      return Verdict::inconclusive("left-limit ladder not evaluable: " + pr.error);
    }
  }
  const ExtReal v_final = ladder.back().value;
  const ExtReal v_prev = ladder.size() > 1 ? ladder[ladder.size() - 2].value : v_final;

  bool value_inf = effectively_infinite(at_u.value);
  bool limit_inf = effectively_infinite(v_final);
  if (value_inf && limit_inf) {
    return Verdict::certified("left limit and value both +inf at U", {u_sup});
  }
  if (value_inf != limit_inf) {
    return Verdict::refuted("left limit and value disagree at U (one is +inf)",
                            {u_sup, v_final, at_u.value});
  }
  double drift = effectively_infinite(v_prev)
                     ? std::numeric_limits<double>::infinity()
                     : std::fabs(v_final.value() - v_prev.value());
  double gap = std::fabs(at_u.value.value() - v_final.value());
  double scale = magnitude_scale({at_u.value, v_final});
  if (gap <= std::max(cfg.tol_convex * scale, 10.0 * drift + 1e-12)) {
    return Verdict::certified("left limit matches the value at U",
                              {u_sup, v_final, at_u.value});
  }
  if (gap > std::max(1e-3 * scale, 100.0 * drift)) {
    return Verdict::refuted("left limit differs from the value at U",
                            {u_sup, v_final, at_u.value});
  }
  return Verdict::inconclusive("left limit estimate too noisy at U",
                               {u_sup, v_final, at_u.value});
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& class_conditions(EClass c) {
  static const std::vector<std::string> n = {"even", "convex", "positive", "ratio_limit_zero",
                                             "ratio_limit_inf"};
  static const std::vector<std::string> strong = {"convex", "zero_iff_zero", "value_limit_inf"};
  static const std::vector<std::string> orlicz = {"convex", "zero_at_zero", "value_limit_inf",
                                                  "nondegenerate", "left_continuity"};
  static const std::vector<std::string> young = {"convex", "value_limit_zero",
                                                 "value_limit_inf"};
  switch (c) {
    case EClass::kN: return n;
    case EClass::kStrongYoung: return strong;
    case EClass::kOrlicz: return orlicz;
    case EClass::kYoung: return young;
  }
  return young;
}

const Verdict& TSampleReport::condition(const std::string& name) const {
  for (const auto& [key, verdict] : conditions) {
    if (key == name) return verdict;
  }
  throw std::out_of_range("no condition named " + name);
}

namespace {

Status fold(Status a, Status b) {
  if (a == Status::kRefuted || b == Status::kRefuted) return Status::kRefuted;
  if (a == Status::kInconclusive || b == Status::kInconclusive) return Status::kInconclusive;
  return Status::kCertified;
}

TSampleReport classify_sample(const ComposedFunction& psi, double t, const CheckConfig& cfg) {
  TSampleReport r;
  r.t = t;
  r.conditions.emplace_back("convex", check_convex(psi, t, cfg));
  r.conditions.emplace_back("even", check_even(psi, t, cfg));
  r.conditions.emplace_back("positive", check_positive(psi, t, cfg));
  r.conditions.emplace_back("zero_at_zero", check_zero_at_zero(psi, t, cfg));
  r.conditions.emplace_back("ratio_limit_zero", check_ratio_limit_zero(psi, t, cfg));
  r.conditions.emplace_back("ratio_limit_inf", check_ratio_limit_inf(psi, t, cfg));
  r.conditions.emplace_back("value_limit_zero", check_value_limit_zero(psi, t, cfg));
  r.conditions.emplace_back("value_limit_inf", check_value_limit_inf(psi, t, cfg));
  r.conditions.emplace_back("zero_iff_zero", check_zero_iff_zero(psi, t, cfg));
  NondegenerateResult nd = nondegenerate_impl(psi, t, cfg);
  r.conditions.emplace_back("nondegenerate", nd.verdict);
  r.nondegenerate_strict = nd.strict;
  try {
    r.u_phi = estimate_U_phi(psi, t, cfg);
    r.u_phi_known = true;
  } catch (const EvalError&) {
    r.u_phi_known = false;
  }
  if (r.u_phi_known) {
    r.conditions.emplace_back("left_continuity", check_left_continuity_at(psi, t, r.u_phi, cfg));
  } else {
    r.conditions.emplace_back(
        "left_continuity",
        Verdict::inconclusive("finiteness boundary unknown (evaluation error)"));
  }
  try {
    r.a_phi = estimate_a_phi(psi, t, cfg);
    r.a_phi_known = true;
  } catch (const EvalError&) {
    r.a_phi_known = false;
  }
  return r;
}

}  // namespace

ClassificationReport classify(const ExprPtr& phi, const ExprPtr& e_t, const ExprPtr& e_u,
                              std::optional<double> p, const CheckConfig& cfg) {
  cfg.validate();
  if (cfg.t_samples.empty()) throw std::invalid_argument("t_samples must be nonempty");

  ComposedFunction psi(phi, e_t, e_u, p);
  ClassificationReport report;
  report.config = cfg;
  report.samples.resize(cfg.t_samples.size());
  parallel_for(cfg.t_samples.size(), [&](std::size_t i) {
    report.samples[i] = classify_sample(psi, cfg.t_samples[i], cfg);
  });

  for (EClass c : kClassChain) {
    ClassOutcome& outcome = report.classes[static_cast<int>(c)];
    outcome.status = Status::kCertified;
    for (const TSampleReport& sample : report.samples) {
      Status st = Status::kCertified;
      for (const std::string& name : class_conditions(c)) {
        st = fold(st, sample.condition(name).status);
      }
      outcome.per_t.push_back(st);
      outcome.status = fold(outcome.status, st);
    }
  }

  report.consistent = true;
  for (std::size_t i = 0; i + 1 < kClassChain.size(); ++i) {
    Status stronger = report.class_status(kClassChain[i]);
    Status weaker = report.class_status(kClassChain[i + 1]);
    if (stronger == Status::kCertified && weaker == Status::kRefuted) {
      report.consistent = false;
    }
    for (std::size_t s = 0; s < report.samples.size(); ++s) {
      if (report.classes[static_cast<int>(kClassChain[i])].per_t[s] == Status::kCertified &&
          report.classes[static_cast<int>(kClassChain[i + 1])].per_t[s] == Status::kRefuted) {
        report.consistent = false;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

ExprPtr phi_sum(const ExprPtr& phi1, const ExprPtr& phi2) {
  return Expr::binary(Expr::BinOp::kAdd, phi1, phi2);
}

ExprPtr phi_scale(const ExprPtr& phi, double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("scale factor must be nonnegative");
  return Expr::binary(Expr::BinOp::kMul, Expr::literal(c), phi);
}

EMap e_sum(const EMap& e1, const EMap& e2) {
  return {Expr::binary(Expr::BinOp::kAdd, e1.e_t, e2.e_t),
          Expr::binary(Expr::BinOp::kAdd, e1.e_u, e2.e_u)};
}

EMap e_scale(const EMap& e, double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("scale factor must be nonnegative");
  return {Expr::binary(Expr::BinOp::kMul, Expr::literal(c), e.e_t),
          Expr::binary(Expr::BinOp::kMul, Expr::literal(c), e.e_u)};
}

}  // namespace eorlicz
