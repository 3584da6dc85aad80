#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eorlicz/classify.hpp"
#include "eorlicz/measure.hpp"

namespace eorlicz {

/// Malformed input: unreadable file, bad JSON, unknown keys, unparseable DSL,
/// misaligned CSV. The CLI maps this to exit code 3.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed problem description.
///
/// JSON schema (unknown keys are rejected):
///   {
///     "phi": "exp(t+u)-1",            -- required
///     "E": ["u", "u"],                -- required, [e_t, e_u]
///     "p": 2.0,                        -- optional parameter
///     "omega": {...},                  -- measure, required for norm/sobolev
///     "t_samples": [0.5, 1, 2],        -- required for classify
///     "classes": ["E-Young"],          -- classify: which classes gate the
///                                         exit code (default: all four)
///     "config": { "u_grid": [...], "ladder_ratio": 2, "tol_convex": 1e-9,
///                 "tol_zero_limit": 1e-4, "big_M": 1e6, "max_ladder": 60 }
///   }
/// omega is {"type": "discrete", "atoms": [[t, w], ...]} or
/// {"type": "interval", "a": 0, "b": 1, "nodes": 1000, "rule": "midpoint"}.
struct SpecFile {
  std::string phi_src;
  std::string e_t_src;
  std::string e_u_src;
  ExprPtr phi;
  ExprPtr e_t;
  ExprPtr e_u;
  std::optional<double> p;
  std::optional<MeasureSpace> omega;
  CheckConfig config;                   ///< resolved: defaults + overrides
  bool has_t_samples = false;
  std::vector<EClass> requested_classes;  ///< default: the full chain

  ComposedFunction composed() const { return ComposedFunction(phi, e_t, e_u, p); }
};

SpecFile load_spec_file(const std::string& path);
SpecFile parse_spec_json(const std::string& text);

/// CSV rows "t,value", one per measure node, matched by position. A header
/// row is skipped when its first field is not numeric. Values must be finite
/// and nonnegative.
GridFunction load_grid_csv(const std::string& path, const MeasureSpace& m);
GridFunction parse_grid_csv(const std::string& text, const MeasureSpace& m);

}  // namespace eorlicz
