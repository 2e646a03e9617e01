#include "oracles.hpp"

#include "posate/errors.hpp"
#include "posate/lp.hpp"
#include "posate/rays.hpp"

#include <doctest.h>

#include <sstream>

using namespace posate;
using posate::test::Rng;

namespace {

LinearSystem system_of(std::vector<Vector> rows, Vector b, std::vector<VarSign> signs) {
  LinearSystem s;
  s.a = Matrix::from_rows(rows, signs.size());
  s.b = std::move(b);
  s.signs = std::move(signs);
  return s;
}

// The simplex {x1, x2 >= 0, x1 + x2 <= 1} with a slack: x1 + x2 + s = 1.
LinearSystem simplex() {
  return system_of({{1, 1, 1}}, {1}, {VarSign::Nonnegative, VarSign::Nonnegative, VarSign::Nonnegative});
}

LinearSystem random_system(Rng& rng) {
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> coin(0, 3);
  const std::size_t m = static_cast<std::size_t>(dim(rng));
  const std::size_t k = static_cast<std::size_t>(dim(rng));
  LinearSystem s;
  s.a = Matrix(m, k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < k; ++c) s.a(r, c) = test::random_rational(rng, 3, 3);
  s.b = test::random_vector(rng, m, 3, 3);
  for (std::size_t c = 0; c < k; ++c) s.signs.push_back(coin(rng) == 0 ? VarSign::Free : VarSign::Nonnegative);
  return s;
}

}  // namespace

TEST_CASE("one-variable feasibility and Farkas") {
  const auto feasible = solve(system_of({{1}}, {1}, {VarSign::Nonnegative}));
  REQUIRE(std::holds_alternative<Feasible>(feasible));
  CHECK(std::get<Feasible>(feasible).x == Vector{1});

  const LinearSystem bad = system_of({{1}}, {-1}, {VarSign::Nonnegative});
  const auto infeasible = solve(bad);
  REQUIRE(std::holds_alternative<Infeasible>(infeasible));
  const Vector y = std::get<Infeasible>(infeasible).certificate.y;
  CHECK(y == Vector{-1});
  CHECK(dot(y, bad.b) == 1);
  CHECK(verify_farkas(bad, {y}));
}

TEST_CASE("optimisation over the simplex") {
  const auto lower = minimize({1, 0, 0}, simplex());
  REQUIRE(std::holds_alternative<Optimal>(lower));
  CHECK(std::get<Optimal>(lower).value == 0);

  const auto upper = maximize({1, 0, 0}, simplex());
  REQUIRE(std::holds_alternative<Optimal>(upper));
  CHECK(std::get<Optimal>(upper).value == 1);
  CHECK(verify_feasible(simplex(), std::get<Optimal>(upper).x));

  const auto half_line = minimize({1}, system_of({{0}}, {0}, {VarSign::Nonnegative}));
  REQUIRE(std::holds_alternative<Optimal>(half_line));
  CHECK(std::get<Optimal>(half_line).value == 0);
}

TEST_CASE("unbounded objectives come with a verified ray") {
  // x1 - x2 = 0, both nonnegative; maximise x1.
  const LinearSystem s = system_of({{1, -1}}, {0}, {VarSign::Nonnegative, VarSign::Nonnegative});
  const auto r = maximize({1, 0}, s);
  REQUIRE(std::holds_alternative<Unbounded>(r));
  const auto& u = std::get<Unbounded>(r);
  CHECK(verify_feasible(s, u.x));
  CHECK(verify_improving_ray(s, {-1, 0}, u.ray));

  const auto free_var = minimize({1}, system_of({{0}}, {0}, {VarSign::Free}));
  REQUIRE(std::holds_alternative<Unbounded>(free_var));
}

TEST_CASE("verbose solver dumps tableaux") {
  std::ostringstream log;
  SolverOptions opts;
  opts.verbosity = 2;
  opts.log = &log;
  solve(simplex(), opts);
  CHECK_FALSE(log.str().empty());
}

TEST_CASE("malformed systems are rejected") {
  LinearSystem s = simplex();
  s.b.push_back(1);
  CHECK_THROWS_AS(solve(s), DimensionMismatch);
}

TEST_CASE("randomised systems: exactly one verifiable answer") {
  Rng rng(2024);
  int feasible = 0;
  int infeasible = 0;
  for (int k = 0; k < 400; ++k) {
    const LinearSystem s = random_system(rng);
    const auto r = solve(s);
    if (const auto* f = std::get_if<Feasible>(&r)) {
      CHECK(verify_feasible(s, f->x));
      ++feasible;
    } else {
      CHECK(verify_farkas(s, std::get<Infeasible>(r).certificate));
      ++infeasible;
    }
    const Vector c = test::random_vector(rng, s.num_vars(), 3, 2);
    const auto o = minimize(c, s);
    if (const auto* opt = std::get_if<Optimal>(&o)) {
      CHECK(verify_feasible(s, opt->x));
      CHECK(dot(c, opt->x) == opt->value);
    } else if (const auto* unb = std::get_if<Unbounded>(&o)) {
      CHECK(verify_improving_ray(s, c, unb->ray));
    } else {
      CHECK(verify_farkas(s, std::get<Infeasible>(o).certificate));
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("minimum is not beaten by feasible vertices of small boxes") {
  // min c.x over 0 <= x <= 1 (with slacks): optimum is sum of negative c_i.
  Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 3;
    LinearSystem s;
    s.a = Matrix(n, 2 * n);
    s.b.assign(n, 1);
    s.signs.assign(2 * n, VarSign::Nonnegative);
    for (std::size_t i = 0; i < n; ++i) {
      s.a(i, i) = 1;
      s.a(i, n + i) = 1;
    }
    Vector c = test::random_vector(rng, n);
    Rational expected = 0;
    for (const auto& x : c) expected += x < 0 ? x : Rational(0);
    c.resize(2 * n);
    const auto r = minimize(c, s);
    REQUIRE(std::holds_alternative<Optimal>(r));
    CHECK(std::get<Optimal>(r).value == expected);
  }
}

TEST_CASE("extreme rays of simple cones") {
  const auto quadrant = extreme_rays(Matrix::identity(2));
  CHECK(quadrant.rays == std::vector<Vector>{{1, 0}, {0, 1}});
  CHECK(quadrant.lineality.empty());

  const auto half = extreme_rays(Matrix::from_rows({{1, 0}}, 2));
  CHECK(half.rays == std::vector<Vector>{{1, 0}});
  CHECK(half.lineality == std::vector<Vector>{{0, 1}});

  const Matrix g = Matrix::from_rows({{1, 0}, {1, -2}}, 2);
  const auto wedge = extreme_rays(g);
  CHECK(wedge.lineality.empty());
  CHECK(wedge.rays.size() == 2);
  CHECK(satisfies_cone(g, wedge));
  std::vector<Vector> sorted = wedge.rays;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == test::brute_force_rays({{1, 0}, {1, -2}}, 2));

  const auto whole = extreme_rays(Matrix(0, 3));
  CHECK(whole.rays.empty());
  CHECK(whole.lineality.size() == 3);

  const auto point = extreme_rays(Matrix::from_rows({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2));
  CHECK(point.rays.empty());
  CHECK(point.lineality.empty());

  CHECK_THROWS_AS(extreme_rays(Matrix(1, kMaxRayDimension + 1)), CapExceeded);
}

TEST_CASE("extreme rays match the facet-intersection oracle in dimensions 2 and 3") {
  Rng rng(77);
  int pointed = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 2);
    std::uniform_int_distribution<int> rows(1, 5);
    std::vector<Vector> g;
    const int m = rows(rng);
    for (int r = 0; r < m; ++r) g.push_back(test::random_vector(rng, n, 3, 2));
    const Matrix gm = Matrix::from_rows(g, n);
    const auto dec = extreme_rays(gm);
    CHECK(satisfies_cone(gm, dec));
    CHECK(dec.lineality.size() == nullspace(gm).size());
    if (!dec.lineality.empty()) continue;
    ++pointed;
    std::vector<Vector> rays = dec.rays;
    std::sort(rays.begin(), rays.end());
    CHECK(rays == test::brute_force_rays(g, n));
  }
  CHECK(pointed > 100);
}

TEST_CASE("rank, nullspace and linear solves") {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(a) == 2);
  for (const auto& v : nullspace(a)) {
    for (const auto& x : a * v) CHECK(x == 0);
  }
  CHECK(nullspace(a).size() == 1);
  const auto x = solve_linear(a, {6, 12, 2});
  REQUIRE(x.has_value());
  CHECK(a * *x == Vector{6, 12, 2});
  CHECK_FALSE(solve_linear(a, {1, 0, 0}).has_value());
}

TEST_CASE("PSD test agrees with a brute-force grid of directions") {
  Rng rng(31);
  std::uniform_int_distribution<int> entry(-2, 2);
  int psd_count = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 2);
    Matrix h(n, n);
    if (k % 3 == 0) {
      // B Bᵗ is PSD and often singular.
      Matrix b(n, n - 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) b(i, j) = entry(rng);
      h = b * b.transpose();
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) h(i, j) = h(j, i) = entry(rng);
    }
    const PsdResult r = check_psd(h);
    if (r.psd) {
      ++psd_count;
      for (const auto& p : r.pivots) CHECK(p >= 0);
    } else {
      CHECK(bilinear(h, r.negative_direction, r.negative_direction) == r.negative_value);
      CHECK(r.negative_value < 0);
    }
    CHECK(r.psd == test::grid_psd_oracle(h, 6));
  }
  CHECK(psd_count > 50);
}

TEST_CASE("PSD examples") {
  CHECK(check_psd(Matrix::from_rows({{4, 2}, {2, 2}}, 2)).psd);
  CHECK_FALSE(check_psd(Matrix::from_rows({{2, 4}, {4, 2}}, 2)).psd);
  // Zero pivot with a nonzero off-diagonal entry.
  const PsdResult r = check_psd(Matrix::from_rows({{0, 1}, {1, 0}}, 2));
  CHECK_FALSE(r.psd);
  CHECK(r.negative_value < 0);
  CHECK(check_psd(Matrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 0}}, 3)).psd);
}
