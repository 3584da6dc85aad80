#include "eorlicz/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eorlicz {

MeasureSpace MeasureSpace::discrete(std::vector<std::pair<double, double>> atoms) {
  if (atoms.empty()) throw std::invalid_argument("discrete measure needs at least one atom");
  MeasureSpace m;
  m.nodes_.reserve(atoms.size());
  for (const auto& [t, w] : atoms) {
    if (!std::isfinite(t)) throw std::invalid_argument("atom coordinate must be finite");
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("atom weight must be finite and nonnegative");
    }
    m.nodes_.push_back({t, w});
    m.mass_ += w;
  }
  std::stable_sort(m.nodes_.begin(), m.nodes_.end(),
                   [](const MeasureNode& x, const MeasureNode& y) { return x.t < y.t; });
  if (!(m.mass_ > 0.0) || !std::isfinite(m.mass_)) {
    throw std::invalid_argument("total mass must be finite and positive");
  }
  return m;
}

MeasureSpace MeasureSpace::interval(double a, double b, int nodes, QuadratureRule rule) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw std::invalid_argument("interval requires finite a < b");
  }
  if (nodes < 1) throw std::invalid_argument("interval needs a positive node count");
  if (rule == QuadratureRule::kTrapezoid && nodes < 2) {
    throw std::invalid_argument("trapezoid rule needs at least two nodes");
  }
  MeasureSpace m;
  m.is_interval_ = true;
  m.a_ = a;
  m.b_ = b;
  m.rule_ = rule;
  m.nodes_.reserve(static_cast<std::size_t>(nodes));
  if (rule == QuadratureRule::kMidpoint) {
    double h = (b - a) / nodes;
    m.spacing_ = h;
    for (int i = 0; i < nodes; ++i) {
      m.nodes_.push_back({a + (i + 0.5) * h, h});
    }
  } else {
    double h = (b - a) / (nodes - 1);
    m.spacing_ = h;
    for (int i = 0; i < nodes; ++i) {
      double w = (i == 0 || i == nodes - 1) ? h / 2.0 : h;
      m.nodes_.push_back({a + i * h, w});
    }
  }
  m.mass_ = b - a;
  return m;
}

GridFunction::GridFunction(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("grid values must be finite");
  }
}

bool GridFunction::all_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

void GridFunction::require_nonnegative(const char* context) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0.0) {
      throw std::invalid_argument(std::string(context) + ": grid value at index " +
                                  std::to_string(i) + " is negative");
    }
  }
}

GridFunction GridFunction::scaled(double c) const {
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = c * values_[i];
  return GridFunction(std::move(out));
}

GridFunction GridFunction::abs() const {
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = std::fabs(values_[i]);
  return GridFunction(std::move(out));
}

GridFunction GridFunction::sum(const GridFunction& f, const GridFunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("grid size mismatch");
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] + g[i];
  return GridFunction(std::move(out));
}

}  // namespace eorlicz
