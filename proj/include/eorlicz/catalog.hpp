#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eorlicz/classify.hpp"

namespace eorlicz {

/// One worked example: a (phi, E) pair with the classification it is claimed
/// to have, both through its map and through the identity map. Fixtures whose
/// claim the checkers contradict ship with known_dispute set and the refuting
/// condition documented, so the contradiction itself is regression-tested.
struct Fixture {
  std::string name;
  std::string description;
  std::string phi_src;
  std::string e_t_src;
  std::string e_u_src;
  std::optional<double> p;
  std::vector<double> t_samples;
  std::string excluded_note;  ///< measure-zero t values deliberately not sampled
  std::vector<std::pair<EClass, Status>> claims;     ///< with the fixture's map
  std::vector<std::pair<EClass, Status>> id_claims;  ///< with the identity map
  bool known_dispute = false;
  std::string dispute_note;
  /// Conditions expected to refute the claim, as (class, condition name).
  std::vector<std::pair<EClass, std::string>> dispute_conditions;

  ComposedFunction composed() const;
  ComposedFunction composed_identity() const;
  CheckConfig config() const;
};

enum class FixtureStatus { kConfirmed, kDisputed, kInconclusive };
const char* to_string(FixtureStatus s);

struct ClaimCheck {
  EClass cls;
  Status expected;
  Status observed;
  bool with_identity = false;
  bool ok = false;
};

struct FixtureReport {
  std::string name;
  FixtureStatus status = FixtureStatus::kInconclusive;
  /// True when the mismatches are exactly the documented dispute and each
  /// documented refuting condition really refutes.
  bool expected_dispute = false;
  std::vector<ClaimCheck> checks;
  ClassificationReport with_map;
  ClassificationReport with_identity;
};

const std::vector<Fixture>& list_fixtures();
/// Throws std::out_of_range for an unknown name.
const Fixture& find_fixture(const std::string& name);

FixtureReport run_fixture(const Fixture& fixture);
FixtureReport run_fixture(const std::string& name);

struct SeparationWitness {
  EClass weaker;    ///< class the witness certifies
  EClass stronger;  ///< class the witness refutes (no reverse implication)
  std::string fixture;
  bool ok = false;
};

struct CatalogSummary {
  bool chain_consistent = false;
  std::vector<SeparationWitness> separations;
  std::vector<std::string> confirmed;
  std::vector<std::string> disputed;
  std::vector<std::string> inconclusive;
  bool disputes_expected = false;  ///< every disputed fixture was shipped as such
};

struct CatalogReport {
  std::vector<FixtureReport> fixtures;
  CatalogSummary summary;
};

CatalogReport run_all();

/// Closure constructions: sums and scalings of same-class certified fixtures
/// sharing a map, map sums/scalings under a linear phi, and perturbation
/// ladders whose classification must stabilize to the limit's.
struct ClosureEntry {
  std::string construction;
  std::string detail;
  EClass cls;
  Status expected;
  Status observed;
  bool ok = false;
};

struct ClosureReport {
  std::vector<ClosureEntry> entries;
  /// c = 0 scalings: degenerate by design, recorded rather than required.
  std::vector<ClosureEntry> exceptions;
  bool all_ok = false;
  bool exceptions_as_documented = false;
};

ClosureReport run_closure_suite();

}  // namespace eorlicz
