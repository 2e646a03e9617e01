#include "oracles.hpp"

#include "posate/errors.hpp"
#include "posate/polytope.hpp"

#include <doctest.h>

using namespace posate;
using posate::test::Rng;

namespace {

std::vector<Polynomial> polys(std::initializer_list<const char*> gens, std::size_t n) {
  std::vector<Polynomial> out;
  for (const char* s : gens) out.push_back(parse_polynomial(s, n));
  return out;
}

std::vector<Polynomial> simplex() { return polys({"x1", "x2", "1 - x1 - x2"}, 2); }

// Random polytope: the box [-b, b]^n cut by a few random half-spaces through
// a neighbourhood of the origin, so the origin stays inside.
std::vector<Polynomial> random_polytope(Rng& rng, std::size_t n) {
  std::vector<Polynomial> gens;
  std::uniform_int_distribution<int> bound(1, 4);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial x = Polynomial::variable(n, i);
    gens.push_back(Polynomial::constant(n, bound(rng)) - x);
    gens.push_back(Polynomial::constant(n, bound(rng)) + x);
  }
  std::uniform_int_distribution<int> extra(0, 3);
  const int m = extra(rng);
  for (int k = 0; k < m; ++k) {
    gens.push_back(affine(test::random_vector(rng, n, 3, 2), Rational(1) + abs(test::random_rational(rng, 2, 2))));
  }
  return gens;
}

}  // namespace

TEST_CASE("linear representations over the simplex") {
  const auto k = simplex();
  const GeneratorSet semi = semiring_of(k);

  const Polynomial f = parse_polynomial("1 - x1", 2);
  const auto r = minkowski_linear_rep(f, k);
  REQUIRE(std::holds_alternative<Certificate>(r));
  CHECK(verify_certificate(f, std::get<Certificate>(r), semi));

  const Polynomial x = parse_polynomial("x1", 2);
  const auto rx = minkowski_linear_rep(x, k);
  REQUIRE(std::holds_alternative<Certificate>(rx));
  CHECK(verify_certificate(x, std::get<Certificate>(rx), semi));

  const auto bad = minkowski_linear_rep(parse_polynomial("x1 - 2", 2), k);
  REQUIRE(std::holds_alternative<RefutationPoint>(bad));
  CHECK(std::get<RefutationPoint>(bad).z == Point{0, 0});
  CHECK(std::get<RefutationPoint>(bad).value == -2);

  CHECK_THROWS_AS(minkowski_linear_rep(parse_polynomial("x1^2", 2), k), PreconditionError);
}

TEST_CASE("compactness classification") {
  CHECK(polytope_status(simplex()) == PolytopeStatus::Compact);
  CHECK(polytope_status(polys({"x1"}, 1)) == PolytopeStatus::Unbounded);
  CHECK(polytope_status(polys({"x1", "-x1 - 1"}, 1)) == PolytopeStatus::Empty);
  CHECK(polytope_status(simplex(), {0}) == PolytopeStatus::Compact);

  const auto half = archimedean_polytope_check(polys({"x1"}, 1));
  REQUIRE(std::holds_alternative<NotPolytopeCompact>(half));
  CHECK(std::get<NotPolytopeCompact>(half).reason == PolytopeStatus::Unbounded);

  const auto empty = archimedean_polytope_check(polys({"x1", "-x1 - 1"}, 1));
  REQUIRE(std::holds_alternative<NotPolytopeCompact>(empty));
  CHECK(std::get<NotPolytopeCompact>(empty).reason == PolytopeStatus::Empty);

  const auto line = minkowski_linear_rep(parse_polynomial("x1", 1), polys({"x1"}, 1));
  CHECK(std::holds_alternative<NotPolytopeCompact>(line));
}

TEST_CASE("archimedean bound for the simplex") {
  const auto k = simplex();
  const auto r = archimedean_polytope_check(k);
  REQUIRE(std::holds_alternative<ArchimedeanCertificate>(r));
  const auto& a = std::get<ArchimedeanCertificate>(r);
  CHECK(a.bound == 1);
  CHECK(a.combos.size() == 4);
  for (const auto& [target, cert] : a.combos) CHECK(verify_certificate(target, cert, semiring_of(k)));
}

TEST_CASE("vertices, extrema and lexicographic minimisers") {
  const auto k = simplex();
  CHECK(polytope_vertices(k) == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(polytope_vertices(k, {0}) == std::vector<Point>{{0, 0}, {0, 1}});
  CHECK(maximum_over(parse_polynomial("x1 + 2 x2", 2), k) == Rational(2));
  CHECK(maximum_over(parse_polynomial("x1", 2), k, {0}) == Rational(0));
  CHECK_FALSE(maximum_over(parse_polynomial("x1", 1), polys({"x1"}, 1)).has_value());
  CHECK(lexmin_minimizer(parse_polynomial("-x1 - x2", 2), k) == Point{0, 1});
}

TEST_CASE("random bounded polytopes are archimedean with verified combos") {
  Rng rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    const auto k = random_polytope(rng, n);
    REQUIRE(polytope_status(k) == PolytopeStatus::Compact);
    const auto r = archimedean_polytope_check(k);
    REQUIRE(std::holds_alternative<ArchimedeanCertificate>(r));
    const auto& a = std::get<ArchimedeanCertificate>(r);
    CHECK(a.combos.size() == 2 * n);
    for (const auto& [target, cert] : a.combos) CHECK(verify_certificate(target, cert, semiring_of(k)));

    // N bounds every vertex coordinate, and N - 1 fails for some coordinate.
    Rational largest = 0;
    for (const auto& v : polytope_vertices(k)) {
      for (const auto& c : v) {
        CHECK(abs(c) <= Rational(a.bound));
        largest = std::max(largest, Rational(abs(c)));
      }
    }
    CHECK(Rational(a.bound) - 1 < largest);
  }
}

TEST_CASE("Minkowski representation agrees with vertex minima") {
  Rng rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    const auto k = random_polytope(rng, n);
    const Polynomial f = affine(test::random_vector(rng, n, 3, 2), test::random_rational(rng, 6, 2));
    Rational lowest = evaluate(f, polytope_vertices(k).front());
    for (const auto& v : polytope_vertices(k)) lowest = std::min(lowest, evaluate(f, v));
    const auto r = minkowski_linear_rep(f, k);
    if (lowest >= 0) {
      REQUIRE(std::holds_alternative<Certificate>(r));
      CHECK(verify_certificate(f, std::get<Certificate>(r), semiring_of(k)));
    } else {
      REQUIRE(std::holds_alternative<RefutationPoint>(r));
      const auto& p = std::get<RefutationPoint>(r);
      CHECK(evaluate(f, p.z) == p.value);
      CHECK(p.value < 0);
      for (const auto& g : k) CHECK(evaluate(g, p.z) >= 0);
    }
  }
}
