#include "oracles.hpp"

#include "posate/errors.hpp"
#include "posate/ideal.hpp"
#include "posate/order_unit.hpp"

#include <doctest.h>

using namespace posate;
using posate::test::Rng;

namespace {

IdealBasis ideal(std::initializer_list<const char*> gens, std::size_t n, IdealRole role = IdealRole::Constraint) {
  IdealBasis b;
  b.role = role;
  for (const char* s : gens) b.generators.push_back(parse_polynomial(s, n));
  return b;
}

GeneratorSet cone(ConeKind kind, std::initializer_list<const char*> gens, std::size_t n) {
  GeneratorSet g;
  g.kind = kind;
  for (const char* s : gens) g.generators.push_back(parse_polynomial(s, n));
  return g;
}

}  // namespace

TEST_CASE("ideal membership with explicit cofactors") {
  const IdealBasis i = ideal({"x1"}, 2);
  const Polynomial f = parse_polynomial("x1 + x1 x2", 2);
  const auto r = ideal_membership(f, i, 1);
  REQUIRE(std::holds_alternative<Cofactors>(r));
  CHECK(std::get<Cofactors>(r).cofactors.at(0) == parse_polynomial("1 + x2", 2));
  CHECK(combine(std::get<Cofactors>(r), i) == f);

  for (int d = 0; d <= 4; ++d) {
    const auto miss = ideal_membership(parse_polynomial("x1^2", 2), ideal({"x2"}, 2), d);
    REQUIRE(std::holds_alternative<MembershipNotFound>(miss));
    CHECK(std::get<MembershipNotFound>(miss).degree == d);
  }
  CHECK_THROWS_AS(ideal_membership(f, ideal({"x1"}, 3), 1), DimensionMismatch);
}

TEST_CASE("membership in the square of (x, y)") {
  const IdealBasis j = ideal({"x1", "x2"}, 3, IdealRole::Variety);
  const IdealBasis j2 = ideal_square(j);
  CHECK(j2.generators.size() == 3);
  // x^2 p + y^2 q + 2xy r with p = 1 + x3, q = 2, r = x3^2.
  const Polynomial f = parse_polynomial("x1^2 (1 + x3) + 2 x2^2 + 2 x1 x2 x3^2", 3);
  const auto r = ideal_membership(f, j2, 2);
  REQUIRE(std::holds_alternative<Cofactors>(r));
  CHECK(combine(std::get<Cofactors>(r), j2) == f);
  CHECK(std::holds_alternative<MembershipNotFound>(ideal_membership(parse_polynomial("x1 x3", 3), j2, 3)));
}

TEST_CASE("random members of a random ideal are recognised") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    IdealBasis i;
    i.generators = {test::random_polynomial(rng, 2, 2, 3), test::random_polynomial(rng, 2, 2, 3)};
    if (i.generators[0].is_zero() || i.generators[1].is_zero()) continue;
    const Polynomial a = test::random_polynomial(rng, 2, 2, 3);
    const Polynomial b = test::random_polynomial(rng, 2, 2, 3);
    const Polynomial f = a * i.generators[0] + b * i.generators[1];
    const auto r = ideal_membership(f, i, 2);
    REQUIRE(std::holds_alternative<Cofactors>(r));
    CHECK(combine(std::get<Cofactors>(r), i) == f);
  }
}

TEST_CASE("tangent spaces") {
  const TangentSpace axis = tangent_space(ideal({"x1", "x2"}, 3, IdealRole::Variety), {0, 0, 0});
  CHECK(axis.rank == 2);
  REQUIRE(axis.basis.size() == 1);
  CHECK(axis.contains({0, 0, 1}));
  CHECK_FALSE(axis.contains({1, 0, 0}));
  CHECK(is_nonsingular(axis, 3, 1));
  CHECK_FALSE(is_nonsingular(axis, 3, 2));

  const TangentSpace line = tangent_space(ideal({"x1"}, 2, IdealRole::Variety), {0, Rational(3, 4)});
  CHECK(line.contains({0, 1}));
  CHECK(line.basis.size() == 1);

  const TangentSpace parabola = tangent_space(ideal({"x1^2 - x2"}, 2, IdealRole::Variety), {1, 1});
  REQUIRE(parabola.basis.size() == 1);
  CHECK(parabola.contains({1, 2}));
  CHECK_FALSE(parabola.contains({1, 0}));

  // Singular point of the cusp y^2 = x^3: the Jacobian vanishes.
  const TangentSpace cusp = tangent_space(ideal({"x2^2 - x1^3"}, 2, IdealRole::Variety), {0, 0});
  CHECK(cusp.rank == 0);
  CHECK_FALSE(is_nonsingular(cusp, 2, 1));

  CHECK_THROWS_AS(tangent_space(ideal({"x1"}, 2, IdealRole::Variety), {1, 0}), PreconditionError);
}

TEST_CASE("order-unit probe on a preordering containing squares") {
  const IdealBasis i = ideal({"x1", "x2"}, 2);
  const GeneratorSet po = cone(ConeKind::Preordering, {"9 - x1^2 - x2^2"}, 2);
  const Polynomial u = parse_polynomial("x1^2 + x2^2", 2);
  const ProbeResult r = order_unit_probe(i, po, u, {parse_polynomial("2 x1 x2", 2), u}, 2, 4);
  CHECK(r.all_bounded());
  REQUIRE(r.targets.size() == 2);
  for (const auto& t : r.targets) {
    CHECK(t.bound == 1u);
    REQUIRE(t.plus.has_value());
    REQUIRE(t.minus.has_value());
    CHECK(verify_certificate(u + t.target, *t.plus, po));
    CHECK(verify_certificate(u - t.target, *t.minus, po));
  }
}

TEST_CASE("order-unit probe finds no bound for x y with u = x") {
  const IdealBasis i = ideal({"x1"}, 2);
  const GeneratorSet qm = cone(ConeKind::QuadraticModule, {"x1", "x2", "1 - x1 - x2"}, 2);
  const Polynomial u = parse_polynomial("x1", 2);
  const Polynomial xy = parse_polynomial("x1 x2", 2);
  const ProbeResult r = order_unit_probe(i, qm, u, {xy}, 3, 5);
  CHECK_FALSE(r.all_bounded());
  REQUIRE(r.targets.size() == 1);
  CHECK_FALSE(r.targets[0].bound.has_value());
  CHECK(r.targets[0].refutations.size() == 5);
  for (const auto& ref : r.targets[0].refutations) {
    const Polynomial probe = Rational(ref.n) * u + Rational(ref.sign) * xy;
    CHECK(verify_separation(probe, qm, ref.functional));
  }

  // Targets outside the ideal are rejected.
  CHECK_THROWS_AS(order_unit_probe(i, qm, u, {parse_polynomial("x2", 2)}, 2, 2), PreconditionError);
}
