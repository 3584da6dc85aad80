#pragma once

#include <vector>

#include "eorlicz/norms.hpp"

namespace eorlicz {

/// Norm of order k built from psi over a one-dimensional interval measure.
/// The grid must leave room for the derivative stencils: at least k + 2
/// nodes, and at least 3 once k >= 1.
struct SobolevSpec {
  int order = 0;
  ComposedFunction psi;
  MeasureSpace m;

  SobolevSpec(int k, ComposedFunction psi_, MeasureSpace m_);
};

/// r-fold finite-difference derivative on the measure's uniform grid:
/// second-order central differences inside, second-order one-sided stencils
/// at the ends. Order 0 returns f unchanged. Output values may be negative;
/// callers that feed a modular take the absolute value first.
GridFunction weak_derivative(const GridFunction& f, const MeasureSpace& m, int order);

struct SobolevResult {
  ExtReal value{0.0};
  std::vector<ExtReal> terms;  ///< per-order norms, orders 0..k
};

/// sum_{r=0..k} luxemburg_norm(|D^r f|); +inf as soon as any term is +inf.
SobolevResult sobolev_norm(const SobolevSpec& spec, const GridFunction& f, double tol = 1e-10);

/// (sum_{r=0..k} lp_norm(D^r f))^(1/p) — the power-norm analogue with the
/// root outside the plain sum of norms.
double sobolev_lp_norm(double p, const MeasureSpace& m, const GridFunction& f, int k);

}  // namespace eorlicz
