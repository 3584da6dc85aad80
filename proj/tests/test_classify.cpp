#include <doctest.h>

#include <cmath>

#include "eorlicz/classify.hpp"
#include "eorlicz/report_json.hpp"

using namespace eorlicz;

namespace {

ComposedFunction with_identity(const std::string& phi, std::optional<double> p = std::nullopt) {
  auto [id_t, id_u] = identity_map();
  return ComposedFunction(parse(phi), id_t, id_u, p);
}

const CheckConfig kCfg = CheckConfig::defaults();

ComposedFunction ex43() {
  return ComposedFunction(parse("piecewise(u<1, -log(u+abs(t)^(1/p)+1), inf)"), parse("u^p"),
                          parse("u"), 2.0);
}

ComposedFunction ex42() {
  return ComposedFunction(parse("piecewise(u<1, u-abs(t), u+abs(t)-2)"), parse("u"), parse("u"));
}

ComposedFunction ex52_sup() {
  return ComposedFunction(parse("piecewise(u>1, t*ln(u), 0)"), parse("1"),
                          parse("piecewise(u>1, inf, 0)"));
}

}  // namespace

TEST_CASE("midpoint convexity") {
  CHECK(check_convex(with_identity("u^2"), 1.0, kCfg).status == Status::kCertified);

  Verdict sqrt_verdict = check_convex(with_identity("u^0.5"), 1.0, kCfg);
  REQUIRE(sqrt_verdict.status == Status::kRefuted);
  // Soundness: the recorded witness violates the inequality when re-evaluated
  // independently.
  const auto& w = sqrt_verdict.evidence.front().witness;
  REQUIRE(w.size() == 5);
  double u1 = w[0].value(), u2 = w[1].value(), mid = w[2].value();
  CHECK(mid == doctest::Approx(0.5 * (u1 + u2)));
  double lhs = std::sqrt(mid);
  double rhs = 0.5 * (std::sqrt(u1) + std::sqrt(u2));
  CHECK(lhs > rhs + kCfg.tol_convex * std::max(1.0, std::fabs(lhs)));

  // t*u^2 under the identity map is concave for negative t.
  CHECK(check_convex(with_identity("t*u^2"), -1.0, kCfg).status == Status::kRefuted);
  CHECK(check_convex(with_identity("t*u^2"), 2.0, kCfg).status == Status::kCertified);

  // Piecewise jumps to +inf still pass: an infinite right side majorizes.
  CHECK(check_convex(ex43(), 0.5, kCfg).status == Status::kCertified);
  CHECK(check_convex(ex52_sup(), 0.5, kCfg).status == Status::kCertified);
  CHECK(check_convex(ex42(), 0.5, kCfg).status == Status::kCertified);
}

TEST_CASE("evenness") {
  CHECK(check_even(with_identity("u^2"), 1.0, kCfg).status == Status::kCertified);
  CHECK(check_even(with_identity("exp(2*u)-1"), 1.0, kCfg).status == Status::kRefuted);
  // ln(u) has no reflection to negative u: inconclusive with a note.
  Verdict v = check_even(with_identity("u^2*ln(u)"), 1.0, kCfg);
  CHECK(v.status == Status::kInconclusive);
}

TEST_CASE("ratio limit at zero") {
  CHECK(check_ratio_limit_zero(with_identity("u^2"), 1.0, kCfg).status == Status::kCertified);

  Verdict expm1 = check_ratio_limit_zero(with_identity("exp(u)-1"), 1.0, kCfg);
  REQUIRE(expm1.status == Status::kRefuted);
  // Estimated level sits at 1.
  REQUIRE(expm1.evidence.front().witness.size() == 2);
  CHECK(expm1.evidence.front().witness[1].value() == doctest::Approx(1.0).epsilon(1e-6));

  Verdict linear = check_ratio_limit_zero(with_identity("u"), 1.0, kCfg);
  REQUIRE(linear.status == Status::kRefuted);
  CHECK(linear.evidence.front().witness[1].value() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("ratio limit at infinity") {
  CHECK(check_ratio_limit_inf(with_identity("u^2"), 1.0, kCfg).status == Status::kCertified);
  CHECK(check_ratio_limit_inf(with_identity("u"), 1.0, kCfg).status == Status::kRefuted);
  CHECK(check_ratio_limit_inf(with_identity("exp(2*u)-1"), 1.0, kCfg).status ==
        Status::kCertified);
}

TEST_CASE("value limit at zero") {
  CHECK(check_value_limit_zero(with_identity("exp(2*u)-1"), 1.0, kCfg).status ==
        Status::kCertified);

  // exp(t+u)-1 under the identity map: psi(1, 0) = e - 1 != 0.
  Verdict off = check_value_limit_zero(with_identity("exp(t+u)-1"), 1.0, kCfg);
  CHECK(off.status == Status::kRefuted);

  CHECK(check_value_limit_zero(ex43(), 0.5, kCfg).status == Status::kCertified);
}

TEST_CASE("value limit at infinity") {
  CHECK(check_value_limit_inf(with_identity("u^2"), 1.0, kCfg).status == Status::kCertified);
  CHECK(check_value_limit_inf(with_identity("1-exp(-u)"), 1.0, kCfg).status == Status::kRefuted);
  CHECK(check_value_limit_inf(ex52_sup(), 0.5, kCfg).status == Status::kCertified);
}

TEST_CASE("vanishing exactly at zero") {
  CHECK(check_zero_iff_zero(with_identity("cosh(u)-1"), 1.0, kCfg).status == Status::kCertified);

  Verdict ramp = check_zero_iff_zero(ex42(), 0.5, kCfg);
  REQUIRE(ramp.status == Status::kRefuted);
  // The witness really is a positive u where the composition vanishes.
  bool found = false;
  for (const Evidence& e : ramp.evidence) {
    if (e.witness.size() == 2 && e.witness[0].value() > 0.0) {
      CHECK(ex42()(0.5, e.witness[0].value()).value() == 0.0);
      found = true;
      break;
    }
  }
  CHECK(found);

  CHECK(check_zero_iff_zero(with_identity("u^p", 3.0), 1.0, kCfg).status == Status::kCertified);
}

TEST_CASE("finiteness boundary") {
  CHECK(estimate_U_phi(with_identity("u^2"), 1.0, kCfg).is_inf());
  ExtReal u43 = estimate_U_phi(ex43(), 0.5, kCfg);
  REQUIRE(u43.is_finite());
  CHECK(std::fabs(u43.value() - 1.0) <= 2e-9);
  ExtReal u52 = estimate_U_phi(ex52_sup(), 0.5, kCfg);
  REQUIRE(u52.is_finite());
  CHECK(std::fabs(u52.value() - 1.0) <= 2e-9);
  // Growth through double overflow is not a genuine boundary.
  CHECK(estimate_U_phi(with_identity("exp(2*u)-1"), 1.0, kCfg).is_inf());
  CHECK(estimate_U_phi(with_identity("cosh(u)-1"), 1.0, kCfg).is_inf());
}

TEST_CASE("positivity threshold") {
  CHECK(estimate_a_phi(with_identity("u^2"), 1.0, kCfg).value() == 0.0);
  ExtReal a42 = estimate_a_phi(ex42(), 0.5, kCfg);
  REQUIRE(a42.is_finite());
  CHECK(std::fabs(a42.value() - 1.0) <= 2e-9);
  ExtReal a52 = estimate_a_phi(ex52_sup(), 0.5, kCfg);
  REQUIRE(a52.is_finite());
  CHECK(std::fabs(a52.value() - 1.0) <= 2e-9);
}

TEST_CASE("left continuity at the boundary") {
  CHECK(check_left_continuity_at(with_identity("u^2"), 1.0, ExtReal::infinity(), kCfg).status ==
        Status::kCertified);

  ExtReal u43 = estimate_U_phi(ex43(), 0.5, kCfg);
  Verdict v43 = check_left_continuity_at(ex43(), 0.5, u43, kCfg);
  REQUIRE(v43.status == Status::kRefuted);
  // Left limit approaches -log(3).
  REQUIRE(v43.evidence.front().witness.size() == 3);
  CHECK(v43.evidence.front().witness[1].value() ==
        doctest::Approx(-std::log(3.0)).epsilon(1e-3));

  // With the boundary given exactly, the sup-norm generator is left
  // continuous: value 0, limit 0.
  Verdict v52 = check_left_continuity_at(ex52_sup(), 0.5, ExtReal(1.0), kCfg);
  CHECK(v52.status == Status::kCertified);
}

TEST_CASE("nondegeneracy") {
  CHECK(check_nondegenerate(with_identity("u^2"), 1.0, kCfg).status == Status::kCertified);
  CHECK(check_nondegenerate(ex42(), 0.5, kCfg).status == Status::kCertified);
  CHECK(check_nondegenerate(with_identity("0"), 1.0, kCfg).status == Status::kRefuted);
  // Values only 0 or +inf: nothing strictly in between.
  CHECK(check_nondegenerate(ex52_sup(), 0.5, kCfg).status == Status::kRefuted);

  // The literal all-u reading is carried as a flag: it holds for u^2 but not
  // for the ramp that vanishes on [0, 1).
  CheckConfig cfg = CheckConfig::defaults();
  cfg.t_samples = {1.0};
  auto [id_t, id_u] = identity_map();
  ClassificationReport square = classify(parse("u^2"), id_t, id_u, std::nullopt, cfg);
  CHECK(square.samples[0].nondegenerate_strict);
  ClassificationReport ramp = classify(parse("piecewise(u<1, u-abs(t), u+abs(t)-2)"),
                                       parse("u"), parse("u"), std::nullopt, cfg);
  CHECK(ramp.class_status(EClass::kOrlicz) == Status::kCertified);
  CHECK_FALSE(ramp.samples[0].nondegenerate_strict);
}

TEST_CASE("default probe grid") {
  CheckConfig cfg = CheckConfig::defaults();
  REQUIRE(cfg.u_grid.size() == 65);
  CHECK(cfg.u_grid.front() == doctest::Approx(1e-8));
  CHECK(cfg.u_grid.back() == doctest::Approx(1e8));
  for (std::size_t i = 1; i < cfg.u_grid.size(); ++i) {
    CHECK(cfg.u_grid[i] > cfg.u_grid[i - 1]);
  }
  CHECK_NOTHROW(cfg.validate());
  cfg.ladder_ratio = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("classification aggregates over t samples") {
  CheckConfig cfg = CheckConfig::defaults();

  cfg.t_samples = {-2.0, -0.5, 0.5, 1.0, 3.0};
  ClassificationReport r211 =
      classify(parse("t*u^2"), parse("abs(t)"), parse("u"), std::nullopt, cfg);
  CHECK(r211.class_status(EClass::kN) == Status::kCertified)
  ;
  CHECK(r211.consistent);

  cfg.t_samples = {-2.0, 0.5, 3.0};
  ClassificationReport r41 =
      classify(parse("exp(u^t)-1"), parse("1"), parse("u"), std::nullopt, cfg);
  CHECK(r41.class_status(EClass::kN) == Status::kRefuted);
  CHECK(r41.class_status(EClass::kStrongYoung) == Status::kCertified);
  CHECK(r41.consistent);

  cfg.t_samples = {0.5, 1.0, 2.0};
  ClassificationReport r43 = classify(parse("piecewise(u<1, -log(u+abs(t)^(1/p)+1), inf)"),
                                      parse("u^p"), parse("u"), 2.0, cfg);
  CHECK(r43.class_status(EClass::kYoung) == Status::kCertified);
  CHECK(r43.class_status(EClass::kOrlicz) == Status::kRefuted);
  CHECK(r43.consistent);
}

TEST_CASE("classification is deterministic") {
  CheckConfig cfg = CheckConfig::defaults();
  cfg.t_samples = {0.5, 1.0, 2.0};
  auto run = [&] {
    return render(json_of(classify(parse("piecewise(u<1, u-abs(t), u+abs(t)-2)"), parse("u"),
                                   parse("u"), std::nullopt, cfg)));
  };
  std::string first = run();
  std::string second = run();
  CHECK(first == second);
  set_max_threads(3);
  std::string parallel = run();
  set_max_threads(1);
  CHECK(first == parallel);
}

TEST_CASE("combinators") {
  auto [id_t, id_u] = identity_map();
  CheckConfig cfg = CheckConfig::defaults();
  cfg.t_samples = {1.0};

  ClassificationReport sum =
      classify(phi_sum(parse("u^2"), parse("u^4")), id_t, id_u, std::nullopt, cfg);
  CHECK(sum.class_status(EClass::kN) == Status::kCertified);

  ClassificationReport doubled =
      classify(phi_scale(parse("u^2"), 2.0), id_t, id_u, std::nullopt, cfg);
  CHECK(doubled.class_status(EClass::kN) == Status::kCertified);

  ClassificationReport zeroed =
      classify(phi_scale(parse("u^2"), 0.0), id_t, id_u, std::nullopt, cfg);
  CHECK(zeroed.class_status(EClass::kN) == Status::kRefuted);
  CHECK(zeroed.class_status(EClass::kStrongYoung) == Status::kRefuted);
  CHECK(zeroed.samples[0].condition("positive").status == Status::kRefuted);

  // Doubled identity map under linear phi doubles the composition.
  EMap doubled_map = e_sum(EMap{id_t, id_u}, EMap{id_t, id_u});
  ComposedFunction psi(parse("u"), doubled_map.e_t, doubled_map.e_u);
  CHECK(psi(3.0, 2.5).value() == doctest::Approx(5.0));

  EMap unit = e_scale(EMap{id_t, id_u}, 1.0);
  ComposedFunction psi_unit(parse("u"), unit.e_t, unit.e_u);
  CHECK(psi_unit(3.0, 2.5).value() == doctest::Approx(2.5));

  EMap collapsed = e_scale(EMap{id_t, id_u}, 0.0);
  ComposedFunction psi_zero(parse("u"), collapsed.e_t, collapsed.e_u);
  CHECK(psi_zero(3.0, 2.5).value() == 0.0);
  CHECK(psi_zero(3.0, 99.0).value() == 0.0);

  CHECK_THROWS_AS(phi_scale(parse("u"), -1.0), std::invalid_argument);
}
