#include <doctest.h>

#include <cmath>
#include <vector>

#include "eorlicz/extreal.hpp"

using eorlicz::EvalError;
using eorlicz::ExtReal;

namespace {
const ExtReal kInf = ExtReal::infinity();
}

TEST_CASE("saturating addition") {
  // a + inf == inf for any finite a, including large negatives.
  for (double a : {-1e308, -3.0, 0.0, 1.0, 1e308}) {
    CHECK((ExtReal(a) + kInf).is_inf());
    CHECK((kInf + ExtReal(a)).is_inf());
  }
  CHECK((kInf + kInf).is_inf());
  CHECK((ExtReal(2.0) + ExtReal(3.0)).value() == 5.0);
  // Double overflow saturates upward but never produces -inf.
  CHECK((ExtReal(1e308) + ExtReal(1e308)).is_inf());
  CHECK_THROWS_AS(ExtReal(-1e308) + ExtReal(-1e308), EvalError);
}

TEST_CASE("subtraction") {
  CHECK_THROWS_AS(kInf - kInf, EvalError);
  CHECK_THROWS_AS(ExtReal(1.0) - kInf, EvalError);
  CHECK((kInf - ExtReal(5.0)).is_inf());
  CHECK((ExtReal(2.0) - ExtReal(5.0)).value() == -3.0);
}

TEST_CASE("multiplication conventions") {
  CHECK((ExtReal(0.0) * kInf).value() == 0.0);
  CHECK((kInf * ExtReal(0.0)).value() == 0.0);
  CHECK((ExtReal(2.0) * kInf).is_inf());
  CHECK((kInf * kInf).is_inf());
  CHECK_THROWS_AS(ExtReal(-3.0) * kInf, EvalError);
  CHECK((ExtReal(3.0) * ExtReal(-2.0)).value() == -6.0);
  CHECK_THROWS_AS(ExtReal(-1e200) * ExtReal(1e200), EvalError);
}

TEST_CASE("division") {
  CHECK_THROWS_AS(ExtReal(0.0) / ExtReal(0.0), EvalError);
  CHECK_THROWS_AS(kInf / kInf, EvalError);
  CHECK((ExtReal(1.0) / ExtReal(0.0)).is_inf());
  CHECK_THROWS_AS(ExtReal(-1.0) / ExtReal(0.0), EvalError);
  CHECK((ExtReal(7.0) / kInf).value() == 0.0);
  CHECK((kInf / ExtReal(2.0)).is_inf());
  CHECK_THROWS_AS(kInf / ExtReal(-2.0), EvalError);
  CHECK((ExtReal(1.0) / ExtReal(4.0)).value() == 0.25);
}

TEST_CASE("powers") {
  CHECK(eorlicz::pow(ExtReal(0.0), ExtReal(0.0)).value() == 1.0);
  CHECK(eorlicz::pow(ExtReal(-2.0), ExtReal(3.0)).value() == -8.0);
  CHECK_THROWS_AS(eorlicz::pow(ExtReal(-8.0), ExtReal(1.0 / 3.0)), EvalError);
  CHECK(eorlicz::pow(ExtReal(0.0), ExtReal(-1.0)).is_inf());
  CHECK(eorlicz::pow(kInf, ExtReal(0.0)).value() == 1.0);
  CHECK(eorlicz::pow(kInf, ExtReal(2.0)).is_inf());
  CHECK(eorlicz::pow(kInf, ExtReal(-1.0)).value() == 0.0);
  CHECK(eorlicz::pow(ExtReal(2.0), kInf).is_inf());
  CHECK(eorlicz::pow(ExtReal(0.5), kInf).value() == 0.0);
}

TEST_CASE("functions") {
  CHECK(eorlicz::exp(kInf).is_inf());
  CHECK(eorlicz::exp(ExtReal(1000.0)).is_inf());  // overflow saturates
  CHECK(eorlicz::exp(ExtReal(0.0)).value() == 1.0);
  CHECK_THROWS_AS(eorlicz::ln(ExtReal(0.0)), EvalError);
  CHECK_THROWS_AS(eorlicz::ln(ExtReal(-1.0)), EvalError);
  CHECK(eorlicz::ln(kInf).is_inf());
  CHECK(eorlicz::ln(ExtReal(std::exp(1.0))).value() == doctest::Approx(1.0));
  CHECK_THROWS_AS(eorlicz::sqrt(ExtReal(-1.0)), EvalError);
  CHECK(eorlicz::sqrt(kInf).is_inf());
  CHECK(eorlicz::cosh(kInf).is_inf());
  CHECK(eorlicz::cosh(ExtReal(1000.0)).is_inf());
  CHECK(eorlicz::abs(kInf).is_inf());
  CHECK(eorlicz::abs(ExtReal(-2.0)).value() == 2.0);
  CHECK(eorlicz::min(ExtReal(1.0), kInf).value() == 1.0);
  CHECK(eorlicz::max(ExtReal(1.0), kInf).is_inf());
}

TEST_CASE("total order") {
  CHECK(kInf > ExtReal(1e308));
  CHECK(kInf == kInf);
  CHECK(ExtReal(-1.0) < ExtReal(0.0));
  CHECK(kInf >= kInf);
  CHECK_FALSE(kInf < kInf);
}

TEST_CASE("negation and construction guards") {
  CHECK_THROWS_AS(-kInf, EvalError);
  CHECK((-ExtReal(2.0)).value() == -2.0);
  CHECK_THROWS_AS(ExtReal(std::nan("")), EvalError);
  CHECK_THROWS_AS(ExtReal(-std::numeric_limits<double>::infinity()), EvalError);
}

TEST_CASE("printing") {
  CHECK(eorlicz::to_string(kInf) == "inf");
  CHECK(eorlicz::to_string(ExtReal(0.5)) == "0.5");
  CHECK(eorlicz::to_string(ExtReal(2.0)) == "2");
}
