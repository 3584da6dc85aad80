#include "eorlicz/sobolev.hpp"

#include <cmath>
#include <stdexcept>

namespace eorlicz {

SobolevSpec::SobolevSpec(int k, ComposedFunction psi_, MeasureSpace m_)
    : order(k), psi(std::move(psi_)), m(std::move(m_)) {
  if (k < 0) throw PreconditionError("derivative order must be nonnegative");
  if (!m.is_interval()) throw PreconditionError("Sobolev norms need an interval measure");
  std::size_t needed = std::max<std::size_t>(static_cast<std::size_t>(k) + 2, k >= 1 ? 3 : 1);
  if (m.size() < needed) {
    throw PreconditionError("grid too small for order " + std::to_string(k) + ": need at least " +
                            std::to_string(needed) + " nodes");
  }
}

namespace {

std::vector<double> first_derivative(const std::vector<double>& f, double h) {
  std::size_t n = f.size();
  std::vector<double> d(n);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  }
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return d;
}

}  // namespace

GridFunction weak_derivative(const GridFunction& f, const MeasureSpace& m, int order) {
  if (order < 0) throw PreconditionError("derivative order must be nonnegative");
  if (!m.is_interval()) throw PreconditionError("weak_derivative needs an interval measure");
  if (f.size() != m.size()) {
    throw PreconditionError("grid function has " + std::to_string(f.size()) +
                            " values but the measure has " + std::to_string(m.size()) +
                            " nodes");
  }
  std::vector<double> values(f.values().begin(), f.values().end());
  if (order > 0 && values.size() < 3) {
    throw PreconditionError("grid too small for a derivative stencil");
  }
  for (int r = 0; r < order; ++r) {
    values = first_derivative(values, m.spacing());
  }
  return GridFunction(std::move(values));
}

SobolevResult sobolev_norm(const SobolevSpec& spec, const GridFunction& f, double tol) {
  SobolevResult result;
  result.terms.reserve(spec.order + 1);
  ExtReal total{0.0};
  for (int r = 0; r <= spec.order; ++r) {
    GridFunction dr = weak_derivative(f, spec.m, r).abs();
    NormResult term = luxemburg_norm(spec.psi, spec.m, dr, tol);
    result.terms.push_back(term.value);
    total += term.value;
  }
  result.value = total;
  return result;
}

double sobolev_lp_norm(double p, const MeasureSpace& m, const GridFunction& f, int k) {
  if (!(p >= 1.0)) throw PreconditionError("sobolev_lp_norm requires p >= 1");
  double sum = 0.0;
  for (int r = 0; r <= k; ++r) {
    sum += lp_norm(p, m, weak_derivative(f, m, r).abs());
  }
  return std::pow(sum, 1.0 / p);
}

}  // namespace eorlicz
