#include "posate/polytope.hpp"

#include "posate/errors.hpp"

#include <algorithm>
#include <functional>

namespace posate {

std::string_view to_string(PolytopeStatus status) {
  switch (status) {
    case PolytopeStatus::Compact: return "compact";
    case PolytopeStatus::Empty: return "empty";
    case PolytopeStatus::Unbounded: return "unbounded";
  }
  return "compact";
}

GeneratorSet semiring_of(std::vector<Polynomial> gens) {
  GeneratorSet s;
  s.kind = ConeKind::Semiring;
  s.generators = std::move(gens);
  return s;
}

namespace {

std::size_t ambient_dim(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw PreconditionError("polytope needs at least one generator");
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens) {
    require_dim(g, n, "polytope generator");
    if (!g.is_affine()) throw PreconditionError("polytope generators must be affine-linear: " + format(g));
  }
  return n;
}

// Variables: x_1..x_n free, then one nonnegative slack per generator with
// g_i(x) - s_i = 0. Active generators get s_i = 0; `fixed` pins affine
// objectives to values for lexicographic refinement.
LinearSystem polytope_system(const std::vector<Polynomial>& gens, const std::set<std::size_t>& active,
                             const std::vector<std::pair<Vector, Rational>>& fixed = {}) {
  const std::size_t n = ambient_dim(gens);
  const std::size_t m = gens.size();
  const std::size_t rows = m + active.size() + fixed.size();
  LinearSystem sys;
  sys.a = Matrix(rows, n + m);
  sys.b.assign(rows, 0);
  sys.signs.assign(n + m, VarSign::Nonnegative);
  for (std::size_t j = 0; j < n; ++j) sys.signs[j] = VarSign::Free;
  for (std::size_t i = 0; i < m; ++i) {
    const Vector a = linear_part(gens[i]);
    for (std::size_t j = 0; j < n; ++j) sys.a(i, j) = a[j];
    sys.a(i, n + i) = -1;
    sys.b[i] = -gens[i].constant_term();
  }
  std::size_t r = m;
  for (std::size_t i : active) {
    if (i >= m) throw PreconditionError("active generator index out of range");
    sys.a(r, n + i) = 1;
    ++r;
  }
  for (const auto& [coeffs, value] : fixed) {
    for (std::size_t j = 0; j < n; ++j) sys.a(r, j) = coeffs[j];
    sys.b[r] = value;
    ++r;
  }
  return sys;
}

Vector objective_vector(const Vector& linear, std::size_t total) {
  Vector c(total);
  std::copy(linear.begin(), linear.end(), c.begin());
  return c;
}

Point x_part(const Vector& x, std::size_t n) { return Point(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n)); }

}  // namespace

PolytopeStatus polytope_status(const std::vector<Polynomial>& gens, const std::set<std::size_t>& active) {
  const std::size_t n = ambient_dim(gens);
  const LinearSystem sys = polytope_system(gens, active);
  if (std::holds_alternative<Infeasible>(solve(sys))) return PolytopeStatus::Empty;
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1;
    const Vector c = objective_vector(e, sys.num_vars());
    if (std::holds_alternative<Unbounded>(minimize(c, sys)) || std::holds_alternative<Unbounded>(maximize(c, sys))) {
      return PolytopeStatus::Unbounded;
    }
  }
  return PolytopeStatus::Compact;
}

std::optional<Point> lexmin_minimizer(const Polynomial& objective, const std::vector<Polynomial>& gens,
                                      const std::set<std::size_t>& active) {
  const std::size_t n = ambient_dim(gens);
  require_dim(objective, n, "objective");
  std::vector<std::pair<Vector, Rational>> fixed;
  const Vector lin = linear_part(objective);
  LinearSystem sys = polytope_system(gens, active);
  auto first = minimize(objective_vector(lin, sys.num_vars()), sys);
  auto* opt = std::get_if<Optimal>(&first);
  if (!opt) return std::nullopt;
  fixed.emplace_back(lin, opt->value);
  Point best = x_part(opt->x, n);
  for (std::size_t j = 0; j < n; ++j) {
    sys = polytope_system(gens, active, fixed);
    Vector e(n);
    e[j] = 1;
    auto r = minimize(objective_vector(e, sys.num_vars()), sys);
    auto* o = std::get_if<Optimal>(&r);
    if (!o) break;  // coordinate unbounded on the optimal face; keep the current point
    fixed.emplace_back(e, o->value);
    best = x_part(o->x, n);
  }
  return best;
}

std::optional<Rational> maximum_over(const Polynomial& objective, const std::vector<Polynomial>& gens,
                                     const std::set<std::size_t>& active) {
  const std::size_t n = ambient_dim(gens);
  require_dim(objective, n, "objective");
  const LinearSystem sys = polytope_system(gens, active);
  auto r = maximize(objective_vector(linear_part(objective), sys.num_vars()), sys);
  if (auto* o = std::get_if<Optimal>(&r)) return o->value + objective.constant_term();
  return std::nullopt;
}

MinkowskiResult minkowski_linear_rep(const Polynomial& f, const std::vector<Polynomial>& gens) {
  const std::size_t n = ambient_dim(gens);
  require_dim(f, n, "Minkowski target");
  if (!f.is_affine()) throw PreconditionError("Minkowski target must be affine-linear");
  const PolytopeStatus status = polytope_status(gens);
  if (status != PolytopeStatus::Compact) return NotPolytopeCompact{status};

  const std::size_t m = gens.size();
  LinearSystem sys;
  sys.a = Matrix(n + 1, m + 1);
  sys.b.assign(n + 1, 0);
  sys.signs.assign(m + 1, VarSign::Nonnegative);
  sys.a(0, 0) = 1;
  sys.b[0] = f.constant_term();
  const Vector fl = linear_part(f);
  for (std::size_t j = 0; j < n; ++j) sys.b[j + 1] = fl[j];
  for (std::size_t i = 0; i < m; ++i) {
    sys.a(0, i + 1) = gens[i].constant_term();
    const Vector a = linear_part(gens[i]);
    for (std::size_t j = 0; j < n; ++j) sys.a(j + 1, i + 1) = a[j];
  }
  auto r = solve(sys);
  if (auto* feasible = std::get_if<Feasible>(&r)) {
    Certificate cert;
    cert.degree = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      if (feasible->x[k] == 0) continue;
      std::vector<unsigned> alpha(m, 0);
      if (k > 0) alpha[k - 1] = 1;
      cert.terms.push_back({alpha, 0, std::nullopt, feasible->x[k]});
    }
    cert.canonicalize();
    return cert;
  }
  // No representation on a nonempty compact K means min f < 0 there.
  const auto z = lexmin_minimizer(f, gens);
  if (!z) throw std::logic_error("minkowski_linear_rep: compact polytope without a minimiser");
  return RefutationPoint{*z, evaluate(f, *z)};
}

std::variant<ArchimedeanCertificate, NotPolytopeCompact> archimedean_polytope_check(
    const std::vector<Polynomial>& gens) {
  const std::size_t n = ambient_dim(gens);
  const PolytopeStatus status = polytope_status(gens);
  if (status != PolytopeStatus::Compact) return NotPolytopeCompact{status};

  Integer bound = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial xj = Polynomial::variable(n, j);
    for (const Polynomial& obj : {xj, Polynomial(-xj)}) {
      const auto mx = maximum_over(obj, gens);
      bound = std::max(bound, ceil(*mx));
    }
  }
  ArchimedeanCertificate out;
  out.bound = bound;
  const Polynomial big = Polynomial::constant(n, Rational(bound));
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial xj = Polynomial::variable(n, j);
    for (const Polynomial& target : {big - xj, big + xj}) {
      auto rep = minkowski_linear_rep(target, gens);
      auto* cert = std::get_if<Certificate>(&rep);
      if (!cert) throw std::logic_error("archimedean_polytope_check: bound not certified");
      out.combos.emplace_back(target, std::move(*cert));
    }
  }
  return out;
}

std::vector<Point> polytope_vertices(const std::vector<Polynomial>& gens, const std::set<std::size_t>& active) {
  const std::size_t n = ambient_dim(gens);
  const std::size_t m = gens.size();
  std::vector<Vector> rows;
  Vector rhs;
  for (const auto& g : gens) {
    rows.push_back(linear_part(g));
    rhs.push_back(-g.constant_term());
  }
  std::vector<Point> out;
  if (n == 0) return out;
  std::vector<std::size_t> pick;
  std::size_t visited = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == n) {
      if (++visited > 2000000) throw CapExceeded("polytope_vertices: too many constraint subsets");
      Matrix a(n, n);
      Vector b(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = rows[pick[r]][c];
        b[r] = rhs[pick[r]];
      }
      if (rank(a) < n) return;
      const auto z = solve_linear(a, b);
      if (!z) return;
      for (std::size_t i = 0; i < m; ++i) {
        const Rational v = evaluate(gens[i], *z);
        if (v < 0 || (active.count(i) && v != 0)) return;
      }
      if (std::find(out.begin(), out.end(), *z) == out.end()) out.push_back(*z);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace posate
