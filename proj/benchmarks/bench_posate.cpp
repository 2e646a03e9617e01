#include "posate/certify.hpp"
#include "posate/lp.hpp"
#include "posate/rays.hpp"
#include "posate/taylor.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace posate;

namespace {

GeneratorSet simplex() {
  GeneratorSet g;
  g.generators = {parse_polynomial("x1", 2), parse_polynomial("x2", 2), parse_polynomial("1 - x1 - x2", 2)};
  return g;
}

// m x 2m system [A | I] x = b with a random A: always feasible with nonnegative b.
LinearSystem random_lp(std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> rhs(0, 9);
  LinearSystem s;
  s.a = Matrix(m, 2 * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) s.a(r, c) = entry(rng);
    s.a(r, m + r) = 1;
  }
  for (std::size_t r = 0; r < m; ++r) s.b.push_back(rhs(rng));
  s.signs.assign(2 * m, VarSign::Nonnegative);
  return s;
}

}  // namespace

static void BM_SimplexMinimize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const LinearSystem s = random_lp(m, rng);
  Vector c(2 * m);
  for (std::size_t i = 0; i < m; ++i) c[i] = -1;
  for (auto _ : state) benchmark::DoNotOptimize(minimize(c, s));
}
BENCHMARK(BM_SimplexMinimize)->Arg(5)->Arg(10)->Arg(20);

static void BM_HandelmanCertify(benchmark::State& state) {
  const GeneratorSet k = simplex();
  // Positive on the simplex with minimum 1/8 at x1 = x2 = 1/2 along the diagonal edge.
  const Polynomial f = parse_polynomial("x1^2 - x1 x2 + x2^2 - x1/2 - x2/2 + 1/4 + 1/8", 2);
  CertifyOptions opts;
  opts.max_degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(handelman_certify(f, k, opts));
}
BENCHMARK(BM_HandelmanCertify)->Arg(4)->Arg(6)->Arg(8);

static void BM_ExtremeRays(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> entry(-3, 3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < 2 * n; ++r) {
    Vector v(n);
    for (auto& x : v) x = entry(rng);
    rows.push_back(v);
  }
  const Matrix g = Matrix::from_rows(rows, n);
  for (auto _ : state) benchmark::DoNotOptimize(extreme_rays(g));
}
BENCHMARK(BM_ExtremeRays)->Arg(3)->Arg(5)->Arg(8);

static void BM_SqrtDefect(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_defect(n));
}
BENCHMARK(BM_SqrtDefect)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_MAIN();
