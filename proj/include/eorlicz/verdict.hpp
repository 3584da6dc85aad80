#pragma once

#include <string>
#include <vector>

#include "eorlicz/extreal.hpp"

namespace eorlicz {

/// Outcome of a numerical check. Limit checks are semi-decidable, so
/// "inconclusive" is a first-class result, not a failure mode.
enum class Status { kCertified, kRefuted, kInconclusive };

const char* to_string(Status s);

struct Evidence {
  std::string description;
  std::vector<ExtReal> witness;
};

struct Verdict {
  Status status = Status::kInconclusive;
  std::vector<Evidence> evidence;

  static Verdict certified(std::string description, std::vector<ExtReal> witness = {});
  static Verdict refuted(std::string description, std::vector<ExtReal> witness);
  static Verdict inconclusive(std::string description, std::vector<ExtReal> witness = {});

  Verdict& add(std::string description, std::vector<ExtReal> witness = {});
};

/// Worst-of combination: refuted dominates inconclusive dominates certified.
/// Evidence of both operands is concatenated.
Verdict combine(const Verdict& a, const Verdict& b);

/// Sampling and tolerance knobs shared by all checks.
struct CheckConfig {
  /// Strictly increasing positive u probe grid (default: geometric,
  /// 1e-8 ... 1e8, 65 points).
  std::vector<double> u_grid;
  std::vector<double> t_samples{1.0};
  double ladder_ratio = 2.0;     ///< step factor for limit ladders (> 1)
  double tol_convex = 1e-9;      ///< relative tolerance for inequality checks
  double tol_zero_limit = 1e-4;  ///< a limit below this counts as zero
  double big_m = 1e6;            ///< a ladder beyond this counts as diverged
  int max_ladder = 60;           ///< ladder length

  static CheckConfig defaults();
  /// Throws std::invalid_argument on non-positive tolerances or a grid that
  /// is not strictly increasing and positive.
  void validate() const;
};

}  // namespace eorlicz
