#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "eorlicz/extreal.hpp"
#include "eorlicz/parallel.hpp"

namespace eorlicz {

enum class QuadratureRule { kMidpoint, kTrapezoid };

struct MeasureNode {
  double t;
  double w;
};

/// Desk-scale measure space: a finite list of weighted atoms, or an interval
/// [a, b] discretized by a composite quadrature rule. Node enumeration is in
/// strictly nondecreasing t order and fixed at construction. Total mass is
/// finite and positive; all weights are nonnegative.
class MeasureSpace {
 public:
  static MeasureSpace discrete(std::vector<std::pair<double, double>> atoms);
  static MeasureSpace interval(double a, double b, int nodes, QuadratureRule rule);

  std::span<const MeasureNode> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  double total_mass() const { return mass_; }

  bool is_interval() const { return is_interval_; }
  double a() const { return a_; }
  double b() const { return b_; }
  QuadratureRule rule() const { return rule_; }
  /// Node spacing; only meaningful for interval measures (uniform grids).
  double spacing() const { return spacing_; }

 private:
  MeasureSpace() = default;

  std::vector<MeasureNode> nodes_;
  double mass_ = 0.0;
  bool is_interval_ = false;
  double a_ = 0.0, b_ = 0.0, spacing_ = 0.0;
  QuadratureRule rule_ = QuadratureRule::kMidpoint;
};

/// Scalar samples aligned one-to-one with a measure's nodes. Values are
/// always finite; nonnegativity is demanded by the consumers that need it
/// (modulars and norms) rather than here, since derivative grids may go
/// negative.
class GridFunction {
 public:
  explicit GridFunction(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  bool all_zero() const;
  /// Throws std::invalid_argument naming `context` if any value is negative.
  void require_nonnegative(const char* context) const;

  GridFunction scaled(double c) const;
  GridFunction abs() const;
  static GridFunction sum(const GridFunction& f, const GridFunction& g);

 private:
  std::vector<double> values_;
};

/// Sum/quadrature over the measure's nodes with g(index, t), reduced in index
/// order so the result is identical regardless of the thread setting. Any
/// +inf at a positively weighted node makes the result +inf (0 * inf = 0
/// drops nodes of weight zero). Evaluation errors are rethrown with the node
/// index attached.
template <class F>
ExtReal integrate_indexed(const MeasureSpace& m, F&& g) {
  auto nodes = m.nodes();
  std::vector<ExtReal> values(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    try {
      values[i] = g(i, nodes[i].t);
    } catch (const EvalError& err) {
      throw EvalError("node " + std::to_string(i) + " (t=" + to_string(ExtReal(nodes[i].t)) +
                      "): " + err.what());
    }
  });
  ExtReal total{0.0};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    total += ExtReal(nodes[i].w) * values[i];
  }
  return total;
}

/// integrate_indexed for integrands that only need the node coordinate.
template <class F>
ExtReal integrate(const MeasureSpace& m, F&& g) {
  return integrate_indexed(m, [&](std::size_t, double t) { return g(t); });
}

}  // namespace eorlicz
