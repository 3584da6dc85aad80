#include "eorlicz/verdict.hpp"

#include <cmath>
#include <stdexcept>

namespace eorlicz {

const char* to_string(Status s) {
  switch (s) {
    case Status::kCertified: return "certified";
    case Status::kRefuted: return "refuted";
    case Status::kInconclusive: return "inconclusive";
  }
  return "?";
}

Verdict Verdict::certified(std::string description, std::vector<ExtReal> witness) {
  return Verdict{Status::kCertified, {{std::move(description), std::move(witness)}}};
}

Verdict Verdict::refuted(std::string description, std::vector<ExtReal> witness) {
  return Verdict{Status::kRefuted, {{std::move(description), std::move(witness)}}};
}

Verdict Verdict::inconclusive(std::string description, std::vector<ExtReal> witness) {
  return Verdict{Status::kInconclusive, {{std::move(description), std::move(witness)}}};
}

Verdict& Verdict::add(std::string description, std::vector<ExtReal> witness) {
  evidence.push_back({std::move(description), std::move(witness)});
  return *this;
}

Verdict combine(const Verdict& a, const Verdict& b) {
  Verdict out;
  if (a.status == Status::kRefuted || b.status == Status::kRefuted) {
    out.status = Status::kRefuted;
  } else if (a.status == Status::kInconclusive || b.status == Status::kInconclusive) {
    out.status = Status::kInconclusive;
  } else {
    out.status = Status::kCertified;
  }
  out.evidence = a.evidence;
  out.evidence.insert(out.evidence.end(), b.evidence.begin(), b.evidence.end());
  return out;
}

CheckConfig CheckConfig::defaults() {
  CheckConfig cfg;
  cfg.u_grid.reserve(65);
  for (int i = 0; i <= 64; ++i) {
    cfg.u_grid.push_back(std::pow(10.0, -8.0 + 0.25 * i));
  }
  return cfg;
}

void CheckConfig::validate() const {
  if (u_grid.size() < 3) throw std::invalid_argument("u_grid needs at least three points");
  double prev = 0.0;
  for (double u : u_grid) {
    if (!std::isfinite(u) || u <= prev) {
      throw std::invalid_argument("u_grid must be strictly increasing and positive");
    }
    prev = u;
  }
  for (double t : t_samples) {
    if (!std::isfinite(t)) throw std::invalid_argument("t_samples must be finite");
  }
  if (!(ladder_ratio > 1.0)) throw std::invalid_argument("ladder_ratio must exceed 1");
  if (!(tol_convex > 0.0)) throw std::invalid_argument("tol_convex must be positive");
  if (!(tol_zero_limit > 0.0)) throw std::invalid_argument("tol_zero_limit must be positive");
  if (!(big_m > 0.0)) throw std::invalid_argument("big_M must be positive");
  if (max_ladder < 12) throw std::invalid_argument("max_ladder must be at least 12");
}

}  // namespace eorlicz
