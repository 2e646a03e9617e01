#include "oracles.hpp"

#include "posate/checkers.hpp"
#include "posate/errors.hpp"

#include <doctest.h>

using namespace posate;
using posate::test::Rng;

namespace {

Polynomial P(const char* s, std::size_t n = 2) { return parse_polynomial(s, n); }

std::vector<Polynomial> simplex_gens() { return {P("x1"), P("x2"), P("1 - x1 - x2")}; }

GeneratorSet simplex_cone() {
  GeneratorSet g;
  g.generators = simplex_gens();
  return g;
}

GeneratorSet ball() {
  GeneratorSet g;
  g.kind = ConeKind::Preordering;
  g.generators = {P("9 - x1^2 - x2^2 - x3^2", 3)};
  return g;
}

IdealBasis variety(std::initializer_list<const char*> gens, std::size_t n) {
  IdealBasis j;
  j.role = IdealRole::Variety;
  for (const char* s : gens) j.generators.push_back(parse_polynomial(s, n));
  return j;
}

SampleSet points(const Polynomial& f, const GeneratorSet& cone, std::vector<Point> zs) {
  std::vector<Sample> s;
  for (auto& z : zs) s.push_back({std::move(z), SampleOrigin::User});
  return SampleSet::create(f, cone, std::move(s));
}

const ConditionReport* find(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.conditions)
    if (c.condition == name) return &c;
  return nullptr;
}

// Swaps x1 and x2.
Polynomial swapped(const Polynomial& p) {
  return compose(p, {Polynomial::variable(2, 1), Polynomial::variable(2, 0)});
}

}  // namespace

TEST_CASE("sample sets are checked exactly") {
  const Polynomial f = P("x1 (1 + x2)");
  CHECK(points(f, simplex_cone(), {{0, Rational(3, 4)}}).size() == 1);
  CHECK_THROWS_AS(points(f, simplex_cone(), {{Rational(1, 2), 0}}), PreconditionError);
  CHECK_THROWS_AS(points(f, simplex_cone(), {{0, 2}}), PreconditionError);
}

TEST_CASE("cone condition at a boundary zero") {
  const std::vector<Polynomial> face = {P("x1")};
  const IdealBasis v = variety({"x1"}, 2);
  const Point z{0, Rational(3, 4)};

  CHECK(std::holds_alternative<ConeOk>(cone_condition(P("x1 (1 + x2)"), face, v, z)));

  const auto bad = cone_condition(P("x1 (1 - 2 x2)"), face, v, z);
  REQUIRE(std::holds_alternative<ConeViolation>(bad));
  const auto& viol = std::get<ConeViolation>(bad);
  CHECK(viol.direction == Vector{1, 0});
  CHECK(viol.derivative == Rational(-1, 2));
  CHECK(verify_cone_violation(P("x1 (1 - 2 x2)"), face, v, z, viol.direction));
  CHECK_FALSE(verify_cone_violation(P("x1 (1 + x2)"), face, v, z, {1, 0}));

  // Vanishing gradient while the cone leaves the tangent space.
  const auto flat = cone_condition(P("x1^2"), face, v, {0, 0});
  REQUIRE(std::holds_alternative<ConeViolation>(flat));
  CHECK(std::get<ConeViolation>(flat).derivative == 0);
  CHECK(verify_cone_violation(P("x1^2"), face, v, {0, 0}, std::get<ConeViolation>(flat).direction));
}

TEST_CASE("cone condition violations re-verify on random instances") {
  Rng rng(8080);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // f = x1 * q vanishes on {x1 = 0}; the sign of q(z) decides the outcome.
    const Polynomial q = test::random_polynomial(rng, 2, 2, 3) + Polynomial::constant(2, test::random_rational(rng));
    const Polynomial f = P("x1") * q;
    const Point z{0, test::random_rational(rng, 4, 4)};
    const std::vector<Polynomial> face = {P("x1")};
    const IdealBasis v = variety({"x1"}, 2);
    const auto r = cone_condition(f, face, v, z);
    const Rational qz = evaluate(q, z);
    if (qz > 0) {
      CHECK(std::holds_alternative<ConeOk>(r));
    } else {
      REQUIRE(std::holds_alternative<ConeViolation>(r));
      const auto& cv = std::get<ConeViolation>(r);
      CHECK(verify_cone_violation(f, face, v, z, cv.direction));
      CHECK(directional_derivative(f, z, cv.direction) == cv.derivative);
      ++violations;
    }
  }
  CHECK(violations > 0);
}

TEST_CASE("sum of b_i s_i criterion") {
  GeneratorSet k = simplex_cone();
  const Polynomial x = P("x1");
  const auto ok = check_sumbiti(x, {{P("1"), x, std::nullopt}}, k, points(x, k, {{0, 0}, {0, Rational(1, 2)}}));
  CHECK(ok.verdict == Verdict::Verified);

  const Polynomial f = P("x1 (1 - 2 x2)");
  const auto bad =
      check_sumbiti(f, {{P("1 - 2 x2"), x, std::nullopt}}, k, points(f, k, {{0, Rational(3, 4)}}));
  CHECK(bad.verdict == Verdict::Violated);
  REQUIRE(bad.counterexample() != nullptr);
  CHECK(bad.counterexample()->value == Rational(-1, 2));
  CHECK(evaluate(P("1 - 2 x2"), bad.counterexample()->z) == bad.counterexample()->value);

  GeneratorSet quadrant;
  quadrant.generators = {P("x1"), P("x2")};
  const Polynomial sq = P("x1^2 + x2^2");
  const auto edge = check_sumbiti(sq, {{P("x1"), P("x1"), std::nullopt}, {P("x2"), P("x2"), std::nullopt}}, quadrant,
                                  points(sq, quadrant, {{0, 0}}));
  CHECK(edge.verdict == Verdict::Violated);
  CHECK(edge.counterexample()->value == 0);

  CHECK_THROWS_AS(check_sumbiti(x, {{P("2"), x, std::nullopt}}, k, points(x, k, {{0, 0}})), PreconditionError);
}

TEST_CASE("boundary criterion") {
  const GeneratorSet k = simplex_cone();
  const IdealBasis v = variety({"x1"}, 2);
  const Polynomial good = P("x1 (1 + x2)");
  const auto ok = check_boundary_theorem(good, k, {0}, v, 1, points(good, k, {{0, 0}, {0, Rational(3, 4)}, {0, 1}}), 2);
  CHECK(ok.verdict == Verdict::Verified);

  const Polynomial bad = P("x1 (1 - 2 x2)");
  const auto vio = check_boundary_theorem(bad, k, {0}, v, 1, points(bad, k, {{0, Rational(3, 4)}}), 2);
  CHECK(vio.verdict == Verdict::Violated);
  REQUIRE(vio.counterexample() != nullptr);
  CHECK(vio.counterexample()->z == Point{0, Rational(3, 4)});
  CHECK(vio.counterexample()->value == Rational(-1, 2));

  const Polynomial outside = P("x1 + x2^2");
  const auto inc = check_boundary_theorem(outside, k, {0}, v, 1, points(outside, k, {{0, 0}}), 3);
  CHECK(inc.verdict == Verdict::Inconclusive);
  REQUIRE(find(inc, "ideal-membership") != nullptr);
  CHECK(find(inc, "ideal-membership")->verdict == Verdict::Inconclusive);
}

TEST_CASE("polytope face criterion") {
  const auto k = simplex_gens();
  const auto ok = check_polytope_face(P("x1 (1 + x2)"), k, {0}, {{0, Rational(3, 4)}});
  CHECK(ok.verdict == Verdict::Verified);

  const auto bad = check_polytope_face(P("x1 (1 - 2 x2)"), k, {0}, {{0, Rational(3, 4)}});
  CHECK(bad.verdict == Verdict::Violated);
  const Counterexample* ce = bad.counterexample();
  REQUIRE(ce != nullptr);
  REQUIRE(ce->direction.has_value());
  CHECK(ce->z == Point{0, Rational(3, 4)});
  CHECK(*ce->direction == Vector{1, 0});
  CHECK(directional_derivative(P("x1 (1 - 2 x2)"), ce->z, *ce->direction) == Rational(-1, 2));

  // d/dx1 (x1 x2) = x2 vanishes at the vertex (0, 0).
  const auto corner = check_polytope_face(P("x1 x2"), k, {0}, {});
  CHECK(corner.verdict == Verdict::Violated);
  REQUIRE(corner.counterexample() != nullptr);
  CHECK(corner.counterexample()->z == Point{0, 0});

  // f does not vanish on the face.
  const auto off = check_polytope_face(P("x1 + x2"), k, {0}, {});
  CHECK(off.verdict == Verdict::Violated);

  CHECK_THROWS_AS(check_polytope_face(P("x1"), {P("x1")}, {0}, {}), PreconditionError);
}

TEST_CASE("face criterion is invariant under positive scaling and swapping variables") {
  Rng rng(12);
  const auto k = simplex_gens();
  std::vector<Polynomial> k_swapped;
  for (const auto& g : k) k_swapped.push_back(swapped(g));
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial q = test::random_polynomial(rng, 2, 1, 3) + Polynomial::constant(2, Rational(1, 2));
    const Polynomial f = P("x1") * q;
    const Verdict base = check_polytope_face(f, k, {0}, {}).verdict;
    const Rational c = abs(test::random_rational(rng)) + Rational(1, 3);
    CHECK(check_polytope_face(c * f, k, {0}, {}).verdict == base);
    // Generators are swapped too, so index 0 now names the face {x2 = 0}.
    CHECK(check_polytope_face(swapped(f), k_swapped, {0}, {}).verdict == base);
  }
}

TEST_CASE("interior criterion on the axis of a ball") {
  const GeneratorSet k = ball();
  const IdealBasis j = variety({"x1", "x2"}, 3);
  const std::vector<Point> axis = {{0, 0, 0}, {0, 0, 1}, {0, 0, Rational(-5, 2)}};

  const Polynomial sq = P("x1^2 + x2^2", 3);
  CHECK(check_interior_theorem(sq, k, j, 1, points(sq, k, axis), 2, true).verdict == Verdict::Verified);
  const auto unasserted = check_interior_theorem(sq, k, j, 1, points(sq, k, axis), 2, false);
  CHECK(unasserted.verdict == Verdict::Inconclusive);

  const Polynomial saddle = P("x1^2 - x2^2", 3);
  const auto bad = check_interior_theorem(saddle, k, j, 1, points(saddle, k, axis), 2, true);
  CHECK(bad.verdict == Verdict::Violated);
  const Counterexample* ce = bad.counterexample();
  REQUIRE(ce != nullptr);
  REQUIRE(ce->direction.has_value());
  CHECK(ce->value < 0);
  CHECK(hessian_form(saddle, ce->z, *ce->direction) == ce->value);

  // p = 2, q = 1, r = 1: pq - r^2 = 1 > 0.
  const Polynomial mixed = P("2 x1^2 + x2^2 + 2 x1 x2", 3);
  CHECK(check_interior_theorem(mixed, k, j, 1, points(mixed, k, axis), 2, true).verdict == Verdict::Verified);

  // p = q = 1, r = 2: indefinite.
  const Polynomial indefinite = P("x1^2 + x2^2 + 4 x1 x2", 3);
  CHECK(check_interior_theorem(indefinite, k, j, 1, points(indefinite, k, axis), 2, true).verdict ==
        Verdict::Violated);

  // A zero that is not on the declared variety fails the nonsingularity check.
  const auto off = check_interior_theorem(sq, k, variety({"x1", "x2", "x3"}, 3), 1, points(sq, k, axis), 2, true);
  CHECK(off.verdict != Verdict::Verified);
}

TEST_CASE("barycentric grids") {
  const std::vector<Point> tri = {{0, 0}, {1, 0}, {0, 1}};
  for (unsigned d = 1; d <= 6; ++d) {
    const auto grid = barycentric_grid(tri, d, 1000);
    CHECK(grid.size() == (d + 1) * (d + 2) / 2);
    for (const auto& p : grid) {
      CHECK(p[0] >= 0);
      CHECK(p[1] >= 0);
      CHECK(p[0] + p[1] <= 1);
    }
  }
  const std::vector<Point> seg = {{0, 0}, {0, 1}};
  CHECK(barycentric_grid(seg, 4, 1000).size() == 5);
  CHECK(barycentric_grid(tri, 50, 10).size() <= 10);
}
