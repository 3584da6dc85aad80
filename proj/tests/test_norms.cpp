#include <doctest.h>

#include <cmath>
#include <random>

#include "eorlicz/norms.hpp"

using namespace eorlicz;

namespace {

ComposedFunction power_psi(double p) {
  auto [id_t, id_u] = identity_map();
  return ComposedFunction(parse("u^p"), id_t, id_u, p);
}

ComposedFunction square_psi() {
  auto [id_t, id_u] = identity_map();
  return ComposedFunction(parse("u^2"), id_t, id_u);
}

ComposedFunction ex43_psi() {
  return ComposedFunction(parse("piecewise(u<1, -log(u+abs(t)^(1/p)+1), inf)"), parse("u^p"),
                          parse("u"), 2.0);
}

ComposedFunction sup_psi() {
  return ComposedFunction(parse("piecewise(u>1, t*ln(u), 0)"), parse("1"),
                          parse("piecewise(u>1, inf, 0)"));
}

const CheckConfig kCfg = CheckConfig::defaults();

}  // namespace

TEST_CASE("monotonicity gate") {
  double ts[] = {1.0};
  CHECK(check_monotone(square_psi(), ts, kCfg).status == Status::kCertified);
  auto [id_t, id_u] = identity_map();
  ComposedFunction exp2(parse("exp(2*u)-1"), id_t, id_u);
  CHECK(check_monotone(exp2, ts, kCfg).status == Status::kCertified);

  Verdict dec = check_monotone(ex43_psi(), ts, kCfg);
  REQUIRE(dec.status == Status::kRefuted);
  // Witness: [t, u1, u2, psi(u1), psi(u2)] with a genuine decrease.
  const auto& w = dec.evidence.front().witness;
  REQUIRE(w.size() == 5);
  CHECK(w[4] < w[3]);
}

TEST_CASE("modular values") {
  MeasureSpace two = MeasureSpace::discrete({{0.0, 1.0}, {1.0, 1.0}});
  CHECK(modular(square_psi(), two, GridFunction({0.0, 0.0})).value.value() == 0.0);
  CHECK(modular(square_psi(), two, GridFunction({1.0, 2.0})).value.value() ==
        doctest::Approx(5.0));

  MeasureSpace atom = MeasureSpace::discrete({{1.0, 1.0}});
  CHECK(modular(ex43_psi(), atom, GridFunction({1.5})).value.is_inf());

  CHECK_THROWS_AS(modular(square_psi(), two, GridFunction({1.0})), PreconditionError);
  CHECK_THROWS_AS(modular(square_psi(), two, GridFunction({1.0, -1.0})), std::invalid_argument);
}

TEST_CASE("scaling norm on a single atom") {
  MeasureSpace atom = MeasureSpace::discrete({{0.0, 1.0}});
  NormResult r = luxemburg_norm(square_psi(), atom, GridFunction({3.0}));
  CHECK(r.value.value() == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(r.modular_at_value <= ExtReal(1.0));
  CHECK(r.bracket.first <= r.value.value());
  CHECK(r.value.value() <= r.bracket.second);

  NormResult zero = luxemburg_norm(square_psi(), atom, GridFunction({0.0}));
  CHECK(zero.value.value() == 0.0);
}

TEST_CASE("norm agrees with the closed-form power norm") {
  std::mt19937_64 rng(90210);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double p : {1.0, 2.0, 3.0}) {
    ComposedFunction psi = power_psi(p);
    for (int trial = 0; trial < 12; ++trial) {
      int n = 1 + static_cast<int>(unit(rng) * 31);
      std::vector<std::pair<double, double>> atoms;
      std::vector<double> values;
      double peak = 0.0;
      for (int i = 0; i < n; ++i) {
        atoms.emplace_back(i + unit(rng), 0.01 + 2.0 * unit(rng));
        values.push_back(3.0 * unit(rng));
        peak = std::max(peak, values.back());
      }
      if (peak < 0.1) values[0] = 1.0;
      MeasureSpace m = MeasureSpace::discrete(atoms);
      GridFunction f(values);
      double via_norm = luxemburg_norm(psi, m, f).value.value();
      double closed = lp_norm(p, m, f);
      CHECK(std::fabs(via_norm - closed) <= 1e-8 * closed);
    }
  }
}

TEST_CASE("norm bracket invariant") {
  std::mt19937_64 rng(1313);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ComposedFunction psi = power_psi(2.0);
  const double tol = 1e-10;
  for (int trial = 0; trial < 8; ++trial) {
    int n = 1 + static_cast<int>(unit(rng) * 7);
    std::vector<std::pair<double, double>> atoms;
    std::vector<double> values;
    for (int i = 0; i < n; ++i) {
      atoms.emplace_back(i, 0.1 + unit(rng));
      values.push_back(0.5 + 2.0 * unit(rng));
    }
    MeasureSpace m = MeasureSpace::discrete(atoms);
    GridFunction f(values);
    NormResult r = luxemburg_norm(psi, m, f, tol);
    REQUIRE(r.value.is_finite());
    double lambda = r.value.value();
    ExtReal above = modular(psi, m, f.scaled(1.0 / (lambda * (1.0 + 10.0 * tol)))).value;
    ExtReal below = modular(psi, m, f.scaled(1.0 / (lambda * (1.0 - 10.0 * tol)))).value;
    CHECK(above <= ExtReal(1.0));
    CHECK(below >= ExtReal(1.0));
  }
}

TEST_CASE("non-monotone composition is rejected") {
  MeasureSpace atom = MeasureSpace::discrete({{1.0, 1.0}});
  CHECK_THROWS_AS(luxemburg_norm(ex43_psi(), atom, GridFunction({0.5})), PreconditionError);
}

TEST_CASE("sup-norm generator gives the max") {
  MeasureSpace two = MeasureSpace::discrete({{0.0, 1.0}, {1.0, 1.0}});
  GridFunction f({1.5, 0.5});
  NormResult r = luxemburg_norm(sup_psi(), two, f);
  CHECK(r.value.value() == doctest::Approx(1.5).epsilon(1e-9));

  Verdict member = is_member(sup_psi(), two, f);
  CHECK(member.status == Status::kCertified);
  // Strict modular is infinite; membership holds through scaling.
  CHECK(modular(sup_psi(), two, f).value.is_inf());

  // Data beyond the bracket cap: the scaled modular never drops to 1, so the
  // norm is +inf.
  NormResult capped = luxemburg_norm(sup_psi(), two, GridFunction({3e12, 0.0}));
  CHECK(capped.value.is_inf());
  CHECK(capped.modular_at_value.is_inf());
}

TEST_CASE("membership refuted on a doubling ladder") {
  auto [id_t, id_u] = identity_map();
  ComposedFunction tower(parse("exp(exp(u))"), id_t, id_u);
  std::vector<std::pair<double, double>> atoms;
  std::vector<double> values;
  for (int i = 0; i <= 45; ++i) {
    atoms.emplace_back(static_cast<double>(i), 1.0);
    values.push_back(6.6 * std::pow(2.0, i));
  }
  MeasureSpace m = MeasureSpace::discrete(atoms);
  Verdict v = is_member(tower, m, GridFunction(values));
  CHECK(v.status == Status::kRefuted);

  // Finite data under a finite generator is always a member.
  MeasureSpace atom = MeasureSpace::discrete({{0.0, 1.0}});
  CHECK(is_member(square_psi(), atom, GridFunction({7.0})).status == Status::kCertified);
}

TEST_CASE("closed-form power norm") {
  MeasureSpace two = MeasureSpace::discrete({{0.0, 0.5}, {1.0, 0.5}});
  CHECK(lp_norm(1.0, two, GridFunction({2.0, 4.0})) == doctest::Approx(3.0));

  MeasureSpace atom = MeasureSpace::discrete({{0.0, 1.0}});
  CHECK(lp_norm(2.0, atom, GridFunction({3.0})) == doctest::Approx(3.0));

  MeasureSpace fine = MeasureSpace::interval(0.0, 1.0, 1000, QuadratureRule::kMidpoint);
  std::vector<double> linear;
  for (const MeasureNode& n : fine.nodes()) linear.push_back(n.t);
  CHECK(lp_norm(2.0, fine, GridFunction(linear)) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-4));

  CHECK_THROWS_AS(lp_norm(0.5, atom, GridFunction({1.0})), PreconditionError);
}

TEST_CASE("norm axioms on random data") {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ComposedFunction psi = square_psi();
  const double tol = 1e-12;
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + static_cast<int>(unit(rng) * 7);
    std::vector<std::pair<double, double>> atoms;
    std::vector<double> fv, gv;
    for (int i = 0; i < n; ++i) {
      atoms.emplace_back(i, 0.1 + unit(rng));
      fv.push_back(2.0 * unit(rng));
      gv.push_back(2.0 * unit(rng));
    }
    fv[0] += 0.5;
    gv[0] += 0.5;
    MeasureSpace m = MeasureSpace::discrete(atoms);
    GridFunction f(fv), g(gv);
    double nf = luxemburg_norm(psi, m, f, tol).value.value();
    double ng = luxemburg_norm(psi, m, g, tol).value.value();

    for (double c : {0.5, 2.0, 10.0}) {
      double scaled = luxemburg_norm(psi, m, f.scaled(c), tol).value.value();
      CHECK(std::fabs(scaled - c * nf) <= 1e-8 * std::max(1.0, c * nf));
    }
    double nsum = luxemburg_norm(psi, m, GridFunction::sum(f, g), tol).value.value();
    CHECK(nsum <= nf + ng + 1e-8);
    double nfg = luxemburg_norm(psi, m, GridFunction::sum(f, g.scaled(0.0)), tol).value.value();
    CHECK(nfg <= nsum + 1e-10);  // f <= f + g pointwise
  }
}
