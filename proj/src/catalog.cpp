#include "eorlicz/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "eorlicz/parallel.hpp"

namespace eorlicz {

namespace {

constexpr Status kC = Status::kCertified;
constexpr Status kR = Status::kRefuted;

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> all;

  {
    Fixture f;
    f.name = "ex2.1.1";
    f.description = "t*u^2 through (|t|, u): the sign of t no longer matters";
    f.phi_src = "t*u^2";
    f.e_t_src = "abs(t)";
    f.e_u_src = "u";
    f.t_samples = {-2.0, -0.5, 0.5, 1.0, 3.0};
    f.excluded_note = "t = 0 (composition vanishes identically)";
    f.claims = {{EClass::kN, kC}};
    f.id_claims = {{EClass::kN, kR}};  // concave in u for t < 0
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex2.1.2";
    f.description = "(1-t)*u^2 + t*exp(u) through (t, ln(u^2))";
    f.phi_src = "(1-t)*u^2 + t*exp(u)";
    f.e_t_src = "t";
    f.e_u_src = "ln(u^2)";
    f.t_samples = {0.5};
    f.excluded_note = "t = 1 (the log term drops out); t with nonconvex composition";
    f.claims = {{EClass::kN, kC}};
    f.id_claims = {{EClass::kN, kR}};  // exp(u) term is not even
    f.known_dispute = true;
    f.dispute_note =
        "(1-t)*ln(u^2)^2 + t*u^2 blows up as u -> 0+ for t != 1, so psi(u)/u "
        "diverges instead of vanishing";
    f.dispute_conditions = {{EClass::kN, "ratio_limit_zero"}};
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex2.2.1";
    f.description = "exp(t+u)-1 through (u, u): composes to exp(2u)-1";
    f.phi_src = "exp(t+u)-1";
    f.e_t_src = "u";
    f.e_u_src = "u";
    f.t_samples = {0.5, 1.0, 2.0};
    f.excluded_note = "t = 0 (identity-map value at 0 would vanish)";
    f.claims = {{EClass::kYoung, kC}};
    f.id_claims = {{EClass::kYoung, kR}};  // value exp(t)-1 != 0 at u = 0
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex2.2.2";
    f.description = "t*ln(u) above 1, 0 below, through (-|t|, u)";
    f.phi_src = "piecewise(u>1, t*ln(u), 0)";
    f.e_t_src = "-abs(t)";
    f.e_u_src = "u";
    f.t_samples = {1.0, 2.0};
    f.excluded_note = "t encodes |t| of a complex sample; t = 0 excluded";
    f.claims = {{EClass::kYoung, kC}};
    f.id_claims = {{EClass::kYoung, kR}};  // t*ln(u) concave for t > 0
    f.known_dispute = true;
    f.dispute_note =
        "-|t|*ln(u) decreases without bound for u > 1, so the composition "
        "tends to -inf rather than +inf (and has a concave kink at u = 1)";
    f.dispute_conditions = {{EClass::kYoung, "value_limit_inf"}};
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex2.3.1";
    f.description = "exp(u^t)-1 through (|t|, u)";
    f.phi_src = "exp(u^t)-1";
    f.e_t_src = "abs(t)";
    f.e_u_src = "u";
    f.t_samples = {-2.0, 1.0, 3.0};
    f.excluded_note = "|t| < 1 (composition loses convexity near 0 there)";
    f.claims = {{EClass::kStrongYoung, kC}};
    f.id_claims = {{EClass::kStrongYoung, kR}};  // u^t with t < 0 blows up at 0
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex2.3.2";
    f.description = "cosh(t*exp(u))-1 through (u, 0): composes to cosh(u)-1";
    f.phi_src = "cosh(t*exp(u))-1";
    f.e_t_src = "u";
    f.e_u_src = "0";
    f.t_samples = {0.5, 1.0, 2.0};
    f.excluded_note = "t = 0 (identity-map value at 0 would vanish)";
    f.claims = {{EClass::kStrongYoung, kC}};
    f.id_claims = {{EClass::kStrongYoung, kR}};  // value cosh(t)-1 != 0 at u = 0
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex2.4.1";
    f.description = "-t+u through (0, u^p): composes to u^p";
    f.phi_src = "-t+u";
    f.e_t_src = "0";
    f.e_u_src = "u^p";
    f.p = 2.0;
    f.t_samples = {-1.0, 0.5, 2.0};
    f.excluded_note = "t = 0 (identity-map value at 0 would vanish)";
    f.claims = {{EClass::kOrlicz, kC}};
    f.id_claims = {{EClass::kOrlicz, kR}};  // value -t != 0 at u = 0
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex2.4.2";
    f.description = "t+u^(p/(1-t)) through (0, u): composes to u^p";
    f.phi_src = "t+u^(p/(1-t))";
    f.e_t_src = "0";
    f.e_u_src = "u";
    f.p = 2.0;
    f.t_samples = {0.5, 2.0};
    f.excluded_note = "t = 0 (no identity-map refutation there); t = 1 (exponent pole)";
    f.claims = {{EClass::kOrlicz, kC}};
    f.id_claims = {{EClass::kOrlicz, kR}};  // value t != 0 at u = 0
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex4.1";
    f.description = "exp(u^t)-1 through (1, u): composes to exp(u)-1";
    f.phi_src = "exp(u^t)-1";
    f.e_t_src = "1";
    f.e_u_src = "u";
    f.t_samples = {-2.0, 0.5, 3.0};
    f.claims = {{EClass::kStrongYoung, kC}, {EClass::kN, kR}};  // psi(u)/u -> 1 at 0
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex4.2";
    f.description = "kinked ramp through (u, u): 0 below 1, 2u-2 above";
    f.phi_src = "piecewise(u<1, u-abs(t), u+abs(t)-2)";
    f.e_t_src = "u";
    f.e_u_src = "u";
    f.t_samples = {0.5, 1.0, 2.0};
    f.claims = {{EClass::kOrlicz, kC}, {EClass::kStrongYoung, kR}};  // vanishes on [0,1]
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex4.3";
    f.description = "-log(u+|t|^(1/p)+1) below 1, +inf above, through (u^p, u)";
    f.phi_src = "piecewise(u<1, -log(u+abs(t)^(1/p)+1), inf)";
    f.e_t_src = "u^p";
    f.e_u_src = "u";
    f.p = 2.0;
    f.t_samples = {0.5, 1.0, 2.0};
    f.claims = {{EClass::kYoung, kC}, {EClass::kOrlicz, kR}};  // jump at the finiteness edge
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex5.1";
    f.description = "exp(t+u)-1 through (u, u), the exp(2u)-1 space generator";
    f.phi_src = "exp(t+u)-1";
    f.e_t_src = "u";
    f.e_u_src = "u";
    f.t_samples = {0.5, 1.0, 2.0};
    f.claims = {{EClass::kYoung, kC}};
    all.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex5.2";
    f.description =
        "sup-norm generator: composition is 0 on [0,1] and +inf above "
        "(the p = inf member of the power family)";
    f.phi_src = "piecewise(u>1, t*ln(u), 0)";
    f.e_t_src = "1";
    f.e_u_src = "piecewise(u>1, inf, 0)";
    f.t_samples = {0.5, 1.0, 2.0};
    f.claims = {{EClass::kYoung, kC}};
    all.push_back(std::move(f));
  }

  return all;
}

}  // namespace

ComposedFunction Fixture::composed() const {
  return ComposedFunction(parse(phi_src), parse(e_t_src), parse(e_u_src), p);
}

ComposedFunction Fixture::composed_identity() const {
  auto [id_t, id_u] = identity_map();
  return ComposedFunction(parse(phi_src), id_t, id_u, p);
}

CheckConfig Fixture::config() const {
  CheckConfig cfg = CheckConfig::defaults();
  cfg.t_samples = t_samples;
  return cfg;
}

const std::vector<Fixture>& list_fixtures() {
  static const std::vector<Fixture> fixtures = build_fixtures();
  return fixtures;
}

const Fixture& find_fixture(const std::string& name) {
  for (const Fixture& f : list_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture: " + name);
}

const char* to_string(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::kConfirmed: return "confirmed";
    case FixtureStatus::kDisputed: return "disputed";
    case FixtureStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

FixtureReport run_fixture(const Fixture& fixture) {
  FixtureReport report;
  report.name = fixture.name;
  CheckConfig cfg = fixture.config();
  auto [id_t, id_u] = identity_map();
  report.with_map = classify(parse(fixture.phi_src), parse(fixture.e_t_src),
                             parse(fixture.e_u_src), fixture.p, cfg);
  report.with_identity = classify(parse(fixture.phi_src), id_t, id_u, fixture.p, cfg);

  bool any_mismatch = false;
  bool any_inconclusive = false;
  auto check_claims = [&](const std::vector<std::pair<EClass, Status>>& claims,
                          const ClassificationReport& observed, bool with_identity) {
    for (const auto& [cls, expected] : claims) {
      ClaimCheck cc;
      cc.cls = cls;
      cc.expected = expected;
      cc.observed = observed.class_status(cls);
      cc.with_identity = with_identity;
      cc.ok = cc.observed == cc.expected;
      if (!cc.ok) any_mismatch = true;
      if (cc.observed == Status::kInconclusive) any_inconclusive = true;
      report.checks.push_back(cc);
    }
  };
  check_claims(fixture.claims, report.with_map, false);
  check_claims(fixture.id_claims, report.with_identity, true);

  if (!any_mismatch) {
    report.status = any_inconclusive ? FixtureStatus::kInconclusive : FixtureStatus::kConfirmed;
    report.expected_dispute = false;
    return report;
  }
  report.status = FixtureStatus::kDisputed;

  // A dispute is the documented one only if the mismatching claims are
  // exactly the documented classes and each documented condition refutes at
  // some sample.
  if (fixture.known_dispute) {
    bool matches = true;
    for (const ClaimCheck& cc : report.checks) {
      if (cc.ok) continue;
      bool documented = false;
      for (const auto& [cls, cond] : fixture.dispute_conditions) {
        if (!cc.with_identity && cls == cc.cls) documented = true;
      }
      if (!documented) matches = false;
    }
    for (const auto& [cls, cond] : fixture.dispute_conditions) {
      bool refuted_somewhere = false;
      for (const TSampleReport& sample : report.with_map.samples) {
        if (sample.condition(cond).status == Status::kRefuted) refuted_somewhere = true;
      }
      if (!refuted_somewhere) matches = false;
      if (report.with_map.class_status(cls) != Status::kRefuted) matches = false;
    }
    report.expected_dispute = matches;
  }
  return report;
}

FixtureReport run_fixture(const std::string& name) { return run_fixture(find_fixture(name)); }

CatalogReport run_all() {
  CatalogReport report;
  const auto& fixtures = list_fixtures();
  report.fixtures.resize(fixtures.size());
  parallel_for(fixtures.size(), [&](std::size_t i) {
    report.fixtures[i] = run_fixture(fixtures[i]);
  });

  CatalogSummary& summary = report.summary;
  summary.chain_consistent = true;
  summary.disputes_expected = true;
  for (const FixtureReport& fr : report.fixtures) {
    if (!fr.with_map.consistent || !fr.with_identity.consistent) {
      summary.chain_consistent = false;
    }
    switch (fr.status) {
      case FixtureStatus::kConfirmed: summary.confirmed.push_back(fr.name); break;
      case FixtureStatus::kDisputed:
        summary.disputed.push_back(fr.name);
        if (!fr.expected_dispute) summary.disputes_expected = false;
        break;
      case FixtureStatus::kInconclusive: summary.inconclusive.push_back(fr.name); break;
    }
  }

  auto witness = [&](EClass weaker, EClass stronger, const std::string& name) {
    SeparationWitness w{weaker, stronger, name, false};
    for (const FixtureReport& fr : report.fixtures) {
      if (fr.name != name) continue;
      w.ok = fr.with_map.class_status(weaker) == Status::kCertified &&
             fr.with_map.class_status(stronger) == Status::kRefuted;
    }
    return w;
  };
  summary.separations = {
      witness(EClass::kStrongYoung, EClass::kN, "ex4.1"),
      witness(EClass::kOrlicz, EClass::kStrongYoung, "ex4.2"),
      witness(EClass::kYoung, EClass::kOrlicz, "ex4.3"),
  };
  return report;
}

// ---------------------------------------------------------------------------
// Closure suite

namespace {

struct CertifiedFixture {
  const Fixture* fixture;
  const ClassificationReport* report;
};

std::vector<double> sample_intersection(const std::vector<double>& a,
                                        const std::vector<double>& b) {
  std::vector<double> out;
  for (double x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  }
  return out;
}

Status classify_status(const ExprPtr& phi, const ExprPtr& e_t, const ExprPtr& e_u,
                       std::optional<double> p, std::vector<double> t_samples, EClass cls) {
  CheckConfig cfg = CheckConfig::defaults();
  cfg.t_samples = std::move(t_samples);
  return classify(phi, e_t, e_u, p, cfg).class_status(cls);
}

std::string map_key(const Fixture& f) {
  std::string key = to_string(parse(f.e_t_src)) + " | " + to_string(parse(f.e_u_src));
  if (f.p) key += " | p=" + to_string(ExtReal(*f.p));
  return key;
}

}  // namespace

ClosureReport run_closure_suite() {
  ClosureReport report;
  const auto& fixtures = list_fixtures();

  // Classify every fixture once up front.
  std::vector<ClassificationReport> reports(fixtures.size());
  parallel_for(fixtures.size(), [&](std::size_t i) {
    reports[i] = classify(parse(fixtures[i].phi_src), parse(fixtures[i].e_t_src),
                          parse(fixtures[i].e_u_src), fixtures[i].p, fixtures[i].config());
  });

  auto push_entry = [&](std::string construction, std::string detail, EClass cls,
                        Status expected, Status observed) {
    report.entries.push_back(ClosureEntry{std::move(construction), std::move(detail), cls,
                                          expected, observed, observed == expected});
  };

  // (a) phi sums within a class, grouped by shared map.
  for (EClass cls : kClassChain) {
    std::map<std::string, std::vector<CertifiedFixture>> groups;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
      if (reports[i].class_status(cls) == Status::kCertified) {
        groups[map_key(fixtures[i])].push_back({&fixtures[i], &reports[i]});
      }
    }
    for (const auto& [key, members] : groups) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
          const Fixture& a = *members[i].fixture;
          const Fixture& b = *members[j].fixture;
          std::vector<double> ts = sample_intersection(a.t_samples, b.t_samples);
          if (ts.empty()) continue;
          ExprPtr sum = phi_sum(parse(a.phi_src), parse(b.phi_src));
          Status observed = classify_status(sum, parse(a.e_t_src), parse(a.e_u_src), a.p,
                                            ts, cls);
          push_entry("phi_sum", a.name + " + " + b.name, cls, Status::kCertified, observed);
        }
      }
    }
  }

  // Positive scalings re-certify every class the fixture certifies; c = 0 is
  // the documented degenerate exception (positivity conditions fail).
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const Fixture& f = fixtures[i];
    std::vector<EClass> certified;
    for (EClass cls : kClassChain) {
      if (reports[i].class_status(cls) == Status::kCertified) certified.push_back(cls);
    }
    if (certified.empty()) continue;
    for (double c : {0.5, 1.0, 2.0}) {
      ClassificationReport scaled =
          classify(phi_scale(parse(f.phi_src), c), parse(f.e_t_src), parse(f.e_u_src), f.p,
                   f.config());
      for (EClass cls : certified) {
        push_entry("phi_scale", f.name + " * " + to_string(ExtReal(c)), cls,
                   Status::kCertified, scaled.class_status(cls));
      }
    }
    ClassificationReport zero_scaled = classify(
        phi_scale(parse(f.phi_src), 0.0), parse(f.e_t_src), parse(f.e_u_src), f.p, f.config());
    for (EClass cls : {EClass::kN, EClass::kStrongYoung}) {
      Status observed = zero_scaled.class_status(cls);
      report.exceptions.push_back(ClosureEntry{"phi_scale", f.name + " * 0 (degenerate)", cls,
                                               Status::kRefuted, observed,
                                               observed == Status::kRefuted});
    }
  }

  // (b) map sums and scalings under a linear phi.
  {
    ExprPtr linear_phi = parse("u");
    EMap e1{parse("t"), parse("u")};
    EMap e2{parse("t"), parse("u^3")};
    std::vector<double> ts = {0.5, 1.0, 2.0};
    // Classes certified through both maps individually.
    CheckConfig cfg = CheckConfig::defaults();
    cfg.t_samples = ts;
    ClassificationReport r1 = classify(linear_phi, e1.e_t, e1.e_u, std::nullopt, cfg);
    ClassificationReport r2 = classify(linear_phi, e2.e_t, e2.e_u, std::nullopt, cfg);
    EMap sum = e_sum(e1, e2);
    ClassificationReport rsum = classify(linear_phi, sum.e_t, sum.e_u, std::nullopt, cfg);
    for (EClass cls : kClassChain) {
      if (r1.class_status(cls) == Status::kCertified &&
          r2.class_status(cls) == Status::kCertified) {
        push_entry("e_sum", "linear phi with (t,u) + (t,u^3)", cls, Status::kCertified,
                   rsum.class_status(cls));
      }
    }
    for (double c : {0.5, 1.0, 2.0}) {
      EMap scaled = e_scale(e1, c);
      ClassificationReport rs = classify(linear_phi, scaled.e_t, scaled.e_u, std::nullopt, cfg);
      for (EClass cls : kClassChain) {
        if (r1.class_status(cls) == Status::kCertified) {
          push_entry("e_scale", "linear phi with " + to_string(ExtReal(c)) + " * (t,u)", cls,
                     Status::kCertified, rs.class_status(cls));
        }
      }
    }
    EMap zero = e_scale(e1, 0.0);
    ClassificationReport rz = classify(linear_phi, zero.e_t, zero.e_u, std::nullopt, cfg);
    report.exceptions.push_back(ClosureEntry{
        "e_scale", "linear phi with 0 * (t,u) (constant map)", EClass::kYoung, Status::kRefuted,
        rz.class_status(EClass::kYoung), rz.class_status(EClass::kYoung) == Status::kRefuted});
  }

  // (c) perturbation ladders: classification must stabilize to the limit's.
  {
    struct LadderFamily {
      std::string detail;
      const Fixture* base;
    };
    std::vector<LadderFamily> families;
    for (const Fixture& f : fixtures) {
      if (f.name == "ex2.2.1" || f.name == "ex2.4.1") families.push_back({f.name, &f});
    }
    ExprPtr u_squared = parse("u^2");
    for (const LadderFamily& family : families) {
      const Fixture& base = *family.base;
      ClassificationReport limit = classify(parse(base.phi_src), parse(base.e_t_src),
                                            parse(base.e_u_src), base.p, base.config());
      for (int n : {1, 10, 100, 1000}) {
        ExprPtr ladder_phi = phi_sum(parse(base.phi_src), phi_scale(u_squared, 1.0 / n));
        ClassificationReport rn = classify(ladder_phi, parse(base.e_t_src),
                                           parse(base.e_u_src), base.p, base.config());
        for (EClass cls : kClassChain) {
          push_entry("phi_ladder", family.detail + " + u^2/" + std::to_string(n), cls,
                     limit.class_status(cls), rn.class_status(cls));
        }
      }
    }
    // Map ladder: identity perturbed toward itself.
    ExprPtr phi = u_squared;
    auto [id_t, id_u] = identity_map();
    CheckConfig cfg = CheckConfig::defaults();
    cfg.t_samples = {0.5, 1.0, 2.0};
    ClassificationReport limit = classify(phi, id_t, id_u, std::nullopt, cfg);
    for (int n : {1, 10, 100, 1000}) {
      EMap en = e_sum(EMap{id_t, id_u}, e_scale(EMap{id_t, id_u}, 1.0 / n));
      ClassificationReport rn = classify(phi, en.e_t, en.e_u, std::nullopt, cfg);
      for (EClass cls : kClassChain) {
        push_entry("e_ladder", "u^2 with id + id/" + std::to_string(n), cls,
                   limit.class_status(cls), rn.class_status(cls));
      }
    }
  }

  report.all_ok = std::all_of(report.entries.begin(), report.entries.end(),
                              [](const ClosureEntry& e) { return e.ok; });
  report.exceptions_as_documented =
      !report.exceptions.empty() &&
      std::all_of(report.exceptions.begin(), report.exceptions.end(),
                  [](const ClosureEntry& e) { return e.ok; });
  return report;
}

}  // namespace eorlicz
