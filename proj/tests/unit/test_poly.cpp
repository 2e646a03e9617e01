#include "oracles.hpp"

#include "posate/errors.hpp"
#include "posate/polynomial.hpp"
#include "posate/taylor.hpp"

#include <doctest.h>

using namespace posate;
using posate::test::Rng;

namespace {

Polynomial P(const char* text, std::size_t n = 2) { return parse_polynomial(text, n); }
Rational Q(const char* text) { return parse_rational(text); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(to_string(Q("3/6")) == "1/2");
  CHECK(to_string(Q("-3/6")) == "-1/2");
  CHECK_THROWS_AS(Q("3/-6"), ParseError);
  CHECK(to_string(Q("-0/5")) == "0");
  CHECK(to_string(Q("7")) == "7");
  CHECK_THROWS_AS(Q("1/0"), ParseError);
  CHECK_THROWS_AS(Q("1.5"), ParseError);
  CHECK(denominator_is_power_of_two(Q("3/1024")));
  CHECK_FALSE(denominator_is_power_of_two(Q("1/6")));
  CHECK(ceil(Q("-3/2")) == -1);
  CHECK(ceil(Q("5/2")) == 3);
}

TEST_CASE("ring operations") {
  CHECK(P("(x1+x2)*(x1-x2)") == P("x1^2 - x2^2"));
  const Polynomial p = P("3 x1 x2 - 1/2");
  CHECK(p + Polynomial(2) == p);
  CHECK(pow(P("1 - x1/2", 1), 2) == P("1 - x1 + x1^2/4", 1));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == Polynomial::kZeroDegree);
  CHECK_THROWS_AS(P("x1") + P("x1", 3), DimensionMismatch);
}

TEST_CASE("evaluation") {
  CHECK(evaluate(P("x1^2 + x2"), {Q("1/2"), 1}) == Q("5/4"));
  CHECK(evaluate(P("1 - x1 - x2"), {Q("1/3"), Q("1/3")}) == Q("1/3"));
  const Polynomial p = P("4 x1^3 - x1 x2 + 7/3");
  CHECK(evaluate(p, {0, 0}) == p.constant_term());
  CHECK_THROWS_AS(evaluate(p, {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("format and parse round-trip") {
  CHECK(format(P("x2 + x1^2 - 3")) == "x1^2 + x2 - 3");
  CHECK(format(P("0")) == "0");
  CHECK(format(P("-x1 x2 + 2/3 x1")) == "-x1 x2 + 2/3 x1");
  CHECK(format(parse_polynomial("2 y x", {"x", "y"}), {"x", "y"}) == "2 x y");
  CHECK_THROWS_AS(parse_polynomial("z", {"x", "y"}), ParseError);
  CHECK_THROWS_AS(P("x1 +"), ParseError);

  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Polynomial p = test::random_polynomial(rng, 3, 4, 6);
    CHECK(parse_polynomial(format(p), 3) == p);
  }
}

TEST_CASE("directional derivatives") {
  CHECK(directional_derivative(P("x1 (1 + x2)"), {0, Q("3/4")}, {1, 0}) == Q("7/4"));
  CHECK(directional_derivative(P("5"), {1, 2}, {3, 4}) == 0);
  CHECK(directional_derivative(P("-x1"), {0, Q("1/2")}, {1, 0}) == -1);
}

TEST_CASE("hessians") {
  const Matrix h = hessian(P("x1^2 + x2^2"), {0, 0});
  CHECK(h == Matrix::from_rows({{2, 0}, {0, 2}}, 2));
  CHECK(hessian_form(parse_polynomial("x1^2 - x2^2", 3), {0, 0, 0}, {0, 1, 0}) == -2);
  // x^2 p + y^2 q + 2 x y r with p = q = 1, r = 0 on the z-axis.
  const Matrix axis = hessian(parse_polynomial("x1^2 + x2^2", 3), {0, 0, 5});
  CHECK(axis == Matrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 0}}, 3));
  CHECK(axis.is_symmetric());
}

TEST_CASE("derivatives agree with the univariate restriction oracle") {
  Rng rng(11);
  for (int k = 0; k < 150; ++k) {
    const Polynomial p = test::random_polynomial(rng, 3, 4, 5);
    const Point z = test::random_vector(rng, 3);
    const Vector v = test::random_vector(rng, 3);
    const auto coeffs = test::restriction_coefficients(p, z, v);
    const Rational first = coeffs.size() > 1 ? coeffs[1] : Rational(0);
    const Rational second = coeffs.size() > 2 ? coeffs[2] : Rational(0);
    CHECK(directional_derivative(p, z, v) == first);
    CHECK(dot(gradient(p, z), v) == first);
    CHECK(hessian_form(p, z, v) == 2 * second);
    CHECK(hessian(p, z).is_symmetric());
    // restrict_to_line is the library's own restriction; it must match too.
    const Polynomial line = restrict_to_line(p, z, v);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      CHECK(line.coefficient(Monomial::variable(1, 0, static_cast<unsigned>(e))) == coeffs[e]);
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Polynomial p = test::random_polynomial(rng, 2, 3, 4);
    const Polynomial q = test::random_polynomial(rng, 2, 3, 4);
    const Point z = test::random_vector(rng, 2);
    CHECK(evaluate(p * q, z) == evaluate(p, z) * evaluate(q, z));
    CHECK(evaluate(p + q, z) == evaluate(p, z) + evaluate(q, z));
    CHECK(evaluate(p - q, z) == evaluate(p, z) - evaluate(q, z));
  }
}

TEST_CASE("arithmetic does not depend on term order") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const Polynomial p = test::random_polynomial(rng, 3, 3, 5);
    const Polynomial q = test::random_polynomial(rng, 3, 3, 5);
    const Polynomial r = test::random_polynomial(rng, 3, 2, 3);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("Taylor polynomials of sqrt(1 - x)") {
  CHECK(taylor_sqrt(0) == parse_polynomial("1", 1));
  CHECK(taylor_sqrt(1) == parse_polynomial("1 - x1/2", 1));
  CHECK(taylor_sqrt(2) == parse_polynomial("1 - x1/2 - x1^2/8", 1));
  CHECK(binomial_half(2) == Q("-1/8"));
  CHECK(sqrt_defect(1) == parse_polynomial("x1^2/4", 1));
  CHECK(sqrt_defect(2) == parse_polynomial("x1^3/8 + x1^4/64", 1));
  CHECK(evaluate(sqrt_defect(2), {Q("1/2")}) == Q("17/1024"));
  CHECK_THROWS_AS(sqrt_defect(0), PreconditionError);
}

TEST_CASE("square defects: sign, dyadic denominators, support, decreasing at 1/2") {
  Rational previous = 1;
  for (unsigned n = 1; n <= 16; ++n) {
    const Polynomial p = sqrt_defect(n);
    CHECK(inspect_sqrt_defect(n, p).ok());
    // Independent recomputation of the defect from the Taylor polynomial.
    const Polynomial t = taylor_sqrt(n);
    CHECK(p == t * t - parse_polynomial("1 - x1", 1));
    for (const auto& [m, c] : p.terms()) {
      CHECK(c > 0);
      CHECK(denominator_is_power_of_two(c));
      CHECK(m.degree() >= n + 1);
      CHECK(m.degree() <= 2 * n);
    }
    const Rational at_half = evaluate(p, {Q("1/2")});
    CHECK(at_half < previous);
    previous = at_half;
  }
}
