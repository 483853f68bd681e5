#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include "plint/closed_form.hpp"
#include "plint/errors.hpp"
#include "plint/euler_sums.hpp"
#include "plint/numerics.hpp"
#include "support.hpp"

using namespace plint;
using boost::multiprecision::abs;
using boost::multiprecision::log;
using plint::test::rel_diff;

namespace {

const Real kTight("1e-30");

ErrorCode code_of(const auto& thunk) {
  try {
    thunk();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected plint::Error");
  return ErrorCode::ParseError;
}

Real pi() { return boost::math::constants::pi<Real>(); }

}  // namespace

TEST_CASE("precision bounds and defaults") {
  CHECK(Precision().digits() == 30);
  CHECK(Precision(15).tolerance() == Real("1e-13"));
  CHECK(Precision(20).target() == Real("1e-20"));
  CHECK(code_of([] { return Precision(14); }) == ErrorCode::ParameterError);
  CHECK(code_of([] { return Precision(33); }) == ErrorCode::ParameterError);
}

TEST_CASE("eval points are exact") {
  const EvalPoint p(Rational(3, 4));
  CHECK(p.value() == Real("0.75"));
  CHECK(p.one_minus_value() == Real("0.25"));
  CHECK(EvalPoint().at_one());
  CHECK(EvalPoint(Rational(0)).at_zero());
  CHECK(code_of([] { return EvalPoint(Rational(3, 2)); }) == ErrorCode::DomainError);
  CHECK(code_of([] { return EvalPoint(Rational(-1, 2)); }) == ErrorCode::DomainError);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(Real("0.75"), 30) == "0.75");
  CHECK(to_decimal(-zeta_value(3), 10) == "-1.202056903");
  CHECK(to_decimal(to_real(Rational(1, 3)), 15) == "0.333333333333333");
}

TEST_CASE("big integers convert exactly") {
  const mpz_class big("123456789012345678901234567890");
  CHECK(rel_diff(to_real(big), Real("123456789012345678901234567890")) < Real("1e-33"));
  CHECK(to_real(Rational(-7, 8)) == Real("-0.875"));
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3).is_zero());
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(30) == Rational::parse("8615841276005/14322"));
  CHECK(zeta_nonpositive(0) == Rational(-1, 2));
  CHECK(zeta_nonpositive(1) == Rational(-1, 12));
  CHECK(zeta_nonpositive(2).is_zero());
  CHECK(zeta_nonpositive(3) == Rational(1, 120));
}

TEST_CASE("zeta values against independent references") {
  CHECK(rel_diff(zeta_value(2), pi() * pi() / 6) < kTight);
  CHECK(rel_diff(zeta_value(3), Real("1.202056903159594285399738161511449990765")) < kTight);
  CHECK(rel_diff(zeta_value(10), boost::multiprecision::pow(pi(), 10) / 93555) < kTight);
  CHECK(rel_diff(zeta_value(17), Real("1.000007637197637899762273600293563029213")) < kTight);
  // Even values through the Bernoulli formula.
  for (int k = 1; k <= 12; ++k) {
    Real expected = boost::multiprecision::pow(2 * pi(), 2 * k) * abs(to_real(bernoulli(2 * k))) /
                    (2 * to_real(factorial(2 * k)));
    CHECK(rel_diff(zeta_value(2 * k), expected) < kTight);
  }
  CHECK(rel_diff(detail::zeta_borwein(5), zeta_value(5)) < kTight);
  CHECK(code_of([] { return zeta_value(1); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("zeta decreases towards one") {
  for (int k = 2; k < 20; ++k) {
    CHECK(zeta_value(k) > zeta_value(k + 1));
    CHECK(zeta_value(k + 1) > 1);
  }
  CHECK(zeta_value(150) - 1 < Real("1e-44"));
}

TEST_CASE("polylog particular values") {
  CHECK(polylog_value(5, Real(0)) == 0);
  CHECK(rel_diff(polylog_value(1, Real("0.5")), log(Real(2))) < kTight);
  CHECK(rel_diff(polylog_value(0, Real("0.25")), Real(1) / 3) < kTight);
  const Real l2 = log(Real(2));
  CHECK(rel_diff(polylog_value(2, Real("0.5")), zeta_value(2) / 2 - l2 * l2 / 2) < kTight);
  CHECK(rel_diff(polylog_value(3, Real("0.75")), Real("0.844425808862204448504344877348512886704")) < kTight);
  CHECK(rel_diff(polylog_value(4, Real("0.1")), Real("0.1006377531198711537989914174794242537209")) < kTight);
  CHECK(rel_diff(polylog_value(5, Real("0.95")), Real("0.9829575989510685215321674977999052873685")) < kTight);
  CHECK(polylog_value(4, Real(1)) == zeta_value(4));
  CHECK(code_of([] { return polylog_value(1, Real(1)); }) == ErrorCode::DivergentValue);
  CHECK(code_of([] { return polylog_value(0, Real(1)); }) == ErrorCode::DivergentValue);
}

TEST_CASE("polylog near one keeps precision through the complement") {
  const Real eps("1e-6");
  CHECK(rel_diff(polylog_value(2, 1 - eps, eps), Real("1.644919251330510712203044108165598034012")) < kTight);
}

TEST_CASE("series and log expansion agree where both apply") {
  for (int k = 2; k <= 8; ++k) {
    for (const char* a : {"0.55", "0.6", "0.7"}) {
      const Real x(a);
      CHECK(rel_diff(detail::polylog_series(k, x, Real("1e-34")),
                     detail::polylog_log_expansion(k, 1 - x, Real("1e-34"))) < kTight);
    }
  }
}

TEST_CASE("dilogarithm reflection") {
  for (int i = 1; i <= 9; ++i) {
    const Real x = Real(i) / 10;
    const Real lhs = polylog_value(2, x) + polylog_value(2, 1 - x) + log(x) * log(1 - x) - zeta_value(2);
    CHECK(abs(lhs) < kTight);
  }
}

TEST_CASE("polylog monotonicity") {
  for (int k = 2; k <= 6; ++k) {
    Real prev = -1;
    for (int i = 0; i <= 19; ++i) {
      const Real x = Real(i) / 20;
      const Real v = polylog_value(k, x);
      CHECK(v > prev);
      prev = v;
      if (i > 0) CHECK(polylog_value(k + 1, x) < v);
    }
  }
}

TEST_CASE("harmonic values") {
  CHECK(harmonic_value(0, 1).is_zero());
  CHECK(harmonic_value(3, 1) == Rational(11, 6));
  CHECK(harmonic_value(3, 2) == Rational(49, 36));
  for (int n = 1; n <= 50; ++n) CHECK(harmonic_value(n, 1) - harmonic_value(n - 1, 1) == Rational(1, n));
}

TEST_CASE("Euler sums by summation") {
  const Real z2 = zeta_value(2), z3 = zeta_value(3), z4 = zeta_value(4), z6 = zeta_value(6);
  CHECK(rel_diff(euler_sum_value(1, 2), 2 * z3) < kTight);
  CHECK(rel_diff(euler_sum_value(2, 2), Real(7) / 4 * z4) < kTight);
  CHECK(rel_diff(euler_sum_value(1, 3), Real(5) / 4 * z4) < kTight);
  CHECK(rel_diff(euler_sum_value(3, 3), (z3 * z3 + z6) / 2) < kTight);
  CHECK(rel_diff(euler_sum_value(2, 4), z3 * z3 - z6 / 3) < kTight);
  CHECK(rel_diff(euler_sum_value(2, 3), 3 * z2 * z3 - Real(9) / 2 * zeta_value(5)) < kTight);
  for (int i = 2; i <= 8; ++i)
    CHECK(rel_diff(euler_sum_value(1, i), numeric_eval(reduce_S1(i), EvalPoint())) < Real("1e-12"));
  CHECK(code_of([] { return euler_sum_value(2, 1); }) == ErrorCode::NonConvergent);
}

TEST_CASE("numeric evaluation of forms") {
  CHECK(numeric_eval(ClosedForm(), EvalPoint()) == 0);
  CHECK(rel_diff(numeric_eval(scale(zeta(2), 2), EvalPoint()), Real("3.289868133696452872944830333292050378438")) <
        kTight);
  CHECK(rel_diff(numeric_eval(log_x() * li_x(2), EvalPoint(Rational(1, 2))),
                 Real("-0.4035783793269616388778631381903094005303")) < kTight);
  CHECK(rel_diff(numeric_eval(ClosedForm::atom(Atom::euler_sum(2, 2)), EvalPoint()), euler_sum_value(2, 2)) <
        kTight);
  CHECK(numeric_eval(x_pow(-2), EvalPoint(Rational(1, 4))) == 16);
  CHECK(rel_diff(numeric_eval(li_inv_1px(2), EvalPoint(Rational(1))), polylog_value(2, Real("0.5"))) < kTight);
}

TEST_CASE("numeric evaluation at the endpoints") {
  // At x = 1 the limit is taken symbolically first.
  CHECK(rel_diff(numeric_eval(zeta(2) + log_x() * log_1mx(), EvalPoint()), zeta_value(2)) < kTight);
  CHECK(code_of([] { return numeric_eval(log_1mx(), EvalPoint()); }) == ErrorCode::DivergentAtOne);
  CHECK(numeric_eval(li_x(3) + x_pow(2), EvalPoint(Rational(0))) == 0);
  CHECK(code_of([] { return numeric_eval(log_x(), EvalPoint(Rational(0))); }) == ErrorCode::DivergentValue);
}

TEST_CASE("lower precision still meets its tolerance") {
  const Precision p15(15);
  CHECK(rel_diff(zeta_value(3, p15), zeta_value(3)) < p15.tolerance());
  CHECK(rel_diff(polylog_value(3, Real("0.9"), p15), polylog_value(3, Real("0.9"))) < p15.tolerance());
  CHECK(rel_diff(euler_sum_value(2, 3, p15), euler_sum_value(2, 3)) < p15.tolerance());
}
