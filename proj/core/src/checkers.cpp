#include "posate/checkers.hpp"

#include "posate/certify.hpp"
#include "posate/errors.hpp"
#include "posate/polytope.hpp"
#include "posate/rays.hpp"

#include <algorithm>
#include <functional>

namespace posate {

std::string_view to_string(SampleOrigin origin) {
  switch (origin) {
    case SampleOrigin::User: return "user";
    case SampleOrigin::Vertex: return "vertex";
    case SampleOrigin::Grid: return "grid";
  }
  return "user";
}

SampleSet SampleSet::create(const Polynomial& f, const GeneratorSet& cone, std::vector<Sample> samples) {
  cone.validate();
  require_dim(f, cone.dim(), "sampled polynomial");
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Point& z = samples[k].z;
    require_dim(z, cone.dim(), "sample point");
    const std::string where = "sample " + std::to_string(k + 1) + " " + to_string(z);
    if (!cone.contains_point(z)) throw PreconditionError(where + " is outside the basic closed set");
    const Rational v = evaluate(f, z);
    if (v != 0) throw PreconditionError(where + " is not a zero of f (f = " + to_string(v) + ")");
  }
  SampleSet out;
  out.samples_ = std::move(samples);
  return out;
}

namespace {

Matrix gradient_rows(const std::vector<Polynomial>& gens, const Point& z, std::size_t n) {
  Matrix g(gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Vector grad = gradient(gens[i], z);
    for (std::size_t j = 0; j < n; ++j) g(i, j) = grad[j];
  }
  return g;
}

Vector scaled(const Vector& v, const Rational& c) {
  Vector out(v);
  for (auto& x : out) x *= c;
  return out;
}

Vector sum(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

ConditionReport condition(std::string name, Verdict verdict, std::string detail = {},
                          std::optional<std::size_t> sample = std::nullopt) {
  ConditionReport c;
  c.condition = std::move(name);
  c.verdict = verdict;
  c.detail = std::move(detail);
  c.sample = sample;
  return c;
}

ConditionReport violated(std::string name, std::size_t sample, Counterexample cx, std::string detail = {}) {
  ConditionReport c = condition(std::move(name), Verdict::Violated, std::move(detail), sample);
  c.counterexample = std::move(cx);
  return c;
}

GeneratorSet semiring_part(const GeneratorSet& cone) {
  GeneratorSet s;
  s.generators = cone.generators;
  switch (cone.kind) {
    case ConeKind::Preordering: s.kind = ConeKind::Preordering; break;
    case ConeKind::QuadraticModule: s.kind = ConeKind::QuadraticModule; break;
    default: s.kind = ConeKind::Semiring; break;
  }
  return s;
}

std::string term_label(const char* what, std::size_t i) { return std::string(what) + "_" + std::to_string(i + 1); }

// Per-sample checks shared by the boundary and interior criteria: the sample
// must lie on V and V must be nonsingular there. Returns the tangent space
// when both hold.
std::optional<TangentSpace> variety_at(CheckReport& report, const IdealBasis& variety, std::size_t variety_dim,
                                       const Point& z, std::size_t k) {
  const std::size_t n = z.size();
  for (std::size_t i = 0; i < variety.generators.size(); ++i) {
    const Rational v = evaluate(variety.generators[i], z);
    if (v != 0) {
      report.add(violated("on-variety", k, {z, std::nullopt, v, term_label("J", i) + "(z)"},
                          "sample is not on V"));
      return std::nullopt;
    }
  }
  TangentSpace t = tangent_space(variety, z);
  if (!is_nonsingular(t, n, variety_dim)) {
    report.add(violated("nonsingular", k, {z, std::nullopt, Rational(static_cast<long>(t.rank)), "rank J(z)"},
                        "expected rank " + std::to_string(n >= variety_dim ? n - variety_dim : 0)));
    return std::nullopt;
  }
  report.add(condition("nonsingular", Verdict::Verified, "rank " + std::to_string(t.rank), k));
  return t;
}

}  // namespace

ConeConditionResult cone_condition(const Polynomial& f, const std::vector<Polynomial>& constraint_gens,
                                   const IdealBasis& variety, const Point& z) {
  const std::size_t n = f.dim();
  require_dim(z, n, "cone condition point");
  if (evaluate(f, z) != 0) throw PreconditionError("cone condition: f does not vanish at " + to_string(z));
  for (const auto& g : constraint_gens) {
    require_dim(g, n, "constraint generator");
    if (evaluate(g, z) != 0) {
      throw PreconditionError("cone condition: generator " + format(g) + " does not vanish at " + to_string(z));
    }
  }
  const TangentSpace tangent = tangent_space(variety, z);
  const Vector grad = gradient(f, z);

  RayDecomposition dec;
  if (constraint_gens.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector e(n);
      e[j] = 1;
      dec.lineality.push_back(std::move(e));
    }
  } else {
    dec = extreme_rays(gradient_rows(constraint_gens, z, n));
  }

  // Generators of the cone as a list: rays, then ±lineality.
  std::vector<Vector> generators = dec.rays;
  for (const auto& w : dec.lineality) {
    generators.push_back(w);
    generators.push_back(scaled(w, -1));
  }
  const auto outside = std::find_if(generators.begin(), generators.end(),
                                    [&](const Vector& v) { return !tangent.contains(v); });
  if (outside == generators.end()) return ConeOk{};
  const Vector g0 = *outside;

  // A generator v with D_v f(z) < 0 that lies in T is pushed out of T by
  // adding g0 with a large enough multiple of v.
  auto escape = [&](const Vector& v) -> ConeViolation {
    const Rational s = dot(grad, v);
    if (!tangent.contains(v)) return {v, s};
    const Rational t = (abs(dot(grad, g0)) + 1) / abs(s);
    Vector out = sum(g0, scaled(v, t));
    return {out, dot(grad, out)};
  };

  for (const auto& r : dec.rays) {
    const Rational s = dot(grad, r);
    if (s < 0) return escape(r);
    if (s == 0 && !tangent.contains(r)) return ConeViolation{r, s};
  }
  for (const auto& w : dec.lineality) {
    const Rational s = dot(grad, w);
    if (s != 0) return escape(s > 0 ? scaled(w, -1) : w);
    if (!tangent.contains(w)) return ConeViolation{w, s};
  }
  return ConeOk{};
}

bool verify_cone_violation(const Polynomial& f, const std::vector<Polynomial>& constraint_gens,
                           const IdealBasis& variety, const Point& z, const Vector& v) {
  if (v.size() != f.dim() || z.size() != f.dim()) return false;
  if (evaluate(f, z) != 0) return false;
  for (const auto& g : constraint_gens) {
    if (evaluate(g, z) != 0 || directional_derivative(g, z, v) < 0) return false;
  }
  for (const auto& j : variety.generators) {
    if (evaluate(j, z) != 0) return false;
  }
  if (tangent_space(variety, z).contains(v)) return false;
  return directional_derivative(f, z, v) <= 0;
}

CheckReport check_sumbiti(const Polynomial& f, const std::vector<SumbitiTerm>& decomposition,
                          const GeneratorSet& cone, const SampleSet& samples, const SumbitiOptions& opts) {
  cone.validate();
  const std::size_t n = cone.dim();
  require_dim(f, n, "sumbiti target");
  if (decomposition.empty()) throw PreconditionError("decomposition needs at least one term");
  Polynomial total(n);
  for (const auto& term : decomposition) {
    require_dim(term.b, n, "decomposition factor b");
    require_dim(term.s, n, "decomposition factor s");
    total += term.b * term.s;
  }
  if (total != f) {
    throw PreconditionError("decomposition identity fails: sum b_i s_i - f = " + format(total - f));
  }

  CheckReport report;
  report.theorem = "sumbiti";
  report.add(condition("identity", Verdict::Verified, "f = sum b_i s_i exactly"));

  const GeneratorSet semiring = semiring_part(cone);
  for (std::size_t i = 0; i < decomposition.size(); ++i) {
    const SumbitiTerm& term = decomposition[i];
    const std::string name = term_label("s", i) + "-in-semiring";
    if (term.s_certificate) {
      const bool ok = verify_certificate(term.s, *term.s_certificate, semiring);
      report.add(condition(name, ok ? Verdict::Verified : Verdict::Inconclusive,
                           ok ? "supplied certificate verified" : "supplied certificate does not verify"));
      continue;
    }
    try {
      CertifyOptions co;
      co.max_degree = std::max(opts.degree, std::max(term.s.degree(), 0));
      co.basis_cap = opts.basis_cap;
      const auto r = handelman_certify(term.s, semiring, co);
      if (std::holds_alternative<Certificate>(r)) {
        report.add(condition(name, Verdict::Verified, "certificate found"));
      } else {
        report.add(condition(name, Verdict::Inconclusive,
                             "no certificate up to degree " + std::to_string(co.max_degree)));
      }
    } catch (const CapExceeded& e) {
      report.add(condition(name, Verdict::Inconclusive, e.what()));
    }
  }

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Point& z = samples.samples()[k].z;
    bool ok = true;
    for (std::size_t i = 0; i < decomposition.size() && ok; ++i) {
      const Rational v = evaluate(decomposition[i].b, z);
      if (v <= 0) {
        report.add(violated("b-positive", k + 1, {z, std::nullopt, v, term_label("b", i) + "(z)"}));
        ok = false;
      }
    }
    if (ok) report.add(condition("b-positive", Verdict::Verified, {}, k + 1));
  }

  if (opts.epsilon) {
    for (std::size_t i = 0; i < decomposition.size(); ++i) {
      const std::string name = term_label("b", i) + "-minus-epsilon-in-cone";
      const Polynomial target = decomposition[i].b - Polynomial::constant(n, *opts.epsilon);
      try {
        CertifyOptions co;
        co.max_degree = std::max(opts.degree, std::max(target.degree(), 0));
        co.basis_cap = opts.basis_cap;
        const auto r = handelman_certify(target, cone, co);
        report.add(condition(name, std::holds_alternative<Certificate>(r) ? Verdict::Verified : Verdict::Inconclusive,
                             "epsilon = " + to_string(*opts.epsilon)));
      } catch (const CapExceeded& e) {
        report.add(condition(name, Verdict::Inconclusive, e.what()));
      }
    }
  }
  report.notes.push_back("archimedean property of the cone is assumed, not checked");
  report.notes.push_back("b_i > 0 is checked on " + std::to_string(samples.size()) + " sample(s) only");
  report.finalize();
  return report;
}

CheckReport check_boundary_theorem(const Polynomial& f, const GeneratorSet& cone,
                                   const std::vector<std::size_t>& constraint_indices, const IdealBasis& variety,
                                   std::size_t variety_dim, const SampleSet& samples, int degree) {
  cone.validate();
  variety.validate();
  const std::size_t n = cone.dim();
  require_dim(f, n, "boundary target");
  if (variety.dim() != n) throw DimensionMismatch("variety and cone live in different dimensions");
  if (constraint_indices.empty()) throw PreconditionError("boundary criterion needs at least one constraint generator");
  if (variety_dim > n) throw PreconditionError("declared dimension of V exceeds the ambient dimension");

  IdealBasis ideal;
  ideal.role = IdealRole::Constraint;
  for (std::size_t i : constraint_indices) {
    if (i >= cone.generators.size()) throw PreconditionError("constraint index out of range");
    ideal.generators.push_back(cone.generators[i]);
  }

  CheckReport report;
  report.theorem = "boundary";
  try {
    const auto r = ideal_membership(f, ideal, degree);
    if (std::holds_alternative<Cofactors>(r)) {
      report.add(condition("ideal-membership", Verdict::Verified, "cofactor degree <= " + std::to_string(degree)));
    } else {
      report.add(condition("ideal-membership", Verdict::Inconclusive,
                           "no cofactors of degree <= " + std::to_string(degree)));
    }
  } catch (const CapExceeded& e) {
    report.add(condition("ideal-membership", Verdict::Inconclusive, e.what()));
  }

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Point& z = samples.samples()[k].z;
    const std::size_t idx = k + 1;
    bool vanish = true;
    for (std::size_t i = 0; i < ideal.generators.size() && vanish; ++i) {
      const Rational v = evaluate(ideal.generators[i], z);
      if (v != 0) {
        report.add(violated("constraints-vanish", idx,
                            {z, std::nullopt, v, term_label("g", constraint_indices[i]) + "(z)"}));
        vanish = false;
      }
    }
    if (!vanish) continue;
    if (!variety_at(report, variety, variety_dim, z, idx)) continue;
    try {
      const auto r = cone_condition(f, ideal.generators, variety, z);
      if (const auto* bad = std::get_if<ConeViolation>(&r)) {
        report.add(violated("cone-condition", idx, {z, bad->direction, bad->derivative, "D_v f(z)"}));
      } else {
        report.add(condition("cone-condition", Verdict::Verified, {}, idx));
      }
    } catch (const CapExceeded& e) {
      report.add(condition("cone-condition", Verdict::Inconclusive, e.what(), idx));
    }
  }
  if (samples.empty()) report.add(condition("samples", Verdict::Inconclusive, "no samples to check"));
  report.notes.push_back("cone condition and nonsingularity checked on " + std::to_string(samples.size()) +
                         " sample(s) only");
  report.finalize();
  return report;
}

std::vector<Point> barycentric_grid(const std::vector<Point>& vertices, unsigned density, std::size_t max_points) {
  std::vector<Point> out;
  if (vertices.empty() || density == 0) return out;
  const std::size_t n = vertices.front().size();
  const std::size_t m = vertices.size();
  std::vector<unsigned> parts(m, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (out.size() >= max_points) return;
    if (i + 1 == m) {
      parts[i] = left;
      Point p(n);
      for (std::size_t v = 0; v < m; ++v) {
        if (parts[v] == 0) continue;
        const Rational w(static_cast<long>(parts[v]), static_cast<long>(density));
        for (std::size_t j = 0; j < n; ++j) p[j] += w * vertices[v][j];
      }
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
      return;
    }
    for (unsigned c = left + 1; c-- > 0;) {
      parts[i] = c;
      rec(i + 1, left - c);
      if (out.size() >= max_points) return;
    }
  };
  rec(0, density);
  return out;
}

CheckReport check_polytope_face(const Polynomial& f, const std::vector<Polynomial>& gens,
                                const std::set<std::size_t>& face, const std::vector<Point>& user_samples,
                                const PolytopeFaceOptions& opts) {
  if (gens.empty()) throw PreconditionError("polytope needs at least one generator");
  const std::size_t n = gens.front().dim();
  require_dim(f, n, "face target");
  const PolytopeStatus status = polytope_status(gens);
  if (status != PolytopeStatus::Compact) {
    throw PreconditionError("polytope is " + std::string(to_string(status)) + ", expected compact and nonempty");
  }
  for (std::size_t i : face) {
    if (i >= gens.size()) throw PreconditionError("face index out of range");
  }
  if (polytope_status(gens, face) == PolytopeStatus::Empty) throw PreconditionError("face is empty");

  // Generators vanishing identically on F (the listed ones plus implicit equalities).
  std::vector<std::size_t> vanishing;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (face.count(i) || *maximum_over(gens[i], gens, face) == 0) vanishing.push_back(i);
  }

  CheckReport report;
  report.theorem = "polytope-face";
  const std::vector<Point> vertices = polytope_vertices(gens, face);

  // f on aff(F) through an affine parametrisation x = p + N t.
  Matrix a(vanishing.size(), n);
  Vector rhs(vanishing.size());
  for (std::size_t r = 0; r < vanishing.size(); ++r) {
    const Vector lin = linear_part(gens[vanishing[r]]);
    for (std::size_t j = 0; j < n; ++j) a(r, j) = lin[j];
    rhs[r] = -gens[vanishing[r]].constant_term();
  }
  const std::size_t eq_rank = vanishing.empty() ? 0 : rank(a);
  bool vanishes = false;
  if (vanishing.empty()) {
    vanishes = f.is_zero();
  } else {
    const Vector p = *solve_linear(a, rhs);
    const std::vector<Vector> dirs = nullspace(a);
    if (dirs.empty()) {
      vanishes = evaluate(f, p) == 0;
    } else {
      std::vector<Polynomial> images;
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial xj = Polynomial::constant(dirs.size(), p[j]);
        for (std::size_t k = 0; k < dirs.size(); ++k) xj += Polynomial::variable(dirs.size(), k) * dirs[k][j];
        images.push_back(std::move(xj));
      }
      vanishes = compose(f, images).is_zero();
    }
  }
  if (!vanishes) {
    // The principal lattice of order >= deg f is unisolvent, so some point is nonzero.
    const unsigned density = std::max<unsigned>(opts.grid_density, static_cast<unsigned>(std::max(f.degree(), 1)));
    std::vector<Point> search = vertices;
    for (auto& p : barycentric_grid(vertices, density, 200000)) search.push_back(std::move(p));
    for (const auto& z : search) {
      const Rational v = evaluate(f, z);
      if (v != 0) {
        report.add(violated("face-vanishing", 0, {z, std::nullopt, v, "f(z)"}, "f does not vanish on F"));
        report.conditions.back().sample.reset();
        break;
      }
    }
    if (report.conditions.empty()) {
      report.add(condition("face-vanishing", Verdict::Inconclusive, "f nonzero on aff(F) but no witness point found"));
    }
    report.finalize();
    return report;
  }
  report.add(condition("face-vanishing", Verdict::Verified, "f vanishes identically on aff(F)"));

  std::vector<Sample> samples;
  auto push = [&](const Point& z, SampleOrigin origin) {
    auto same = [&](const Sample& s) { return s.z == z; };
    if (std::find_if(samples.begin(), samples.end(), same) == samples.end()) samples.push_back({z, origin});
  };
  for (const auto& z : user_samples) {
    require_dim(z, n, "face sample");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Rational v = evaluate(gens[i], z);
      if (v < 0 || (face.count(i) && v != 0)) {
        throw PreconditionError("sample " + to_string(z) + " is not on the face");
      }
    }
    push(z, SampleOrigin::User);
  }
  for (const auto& z : vertices) push(z, SampleOrigin::Vertex);
  for (const auto& z : barycentric_grid(vertices, opts.grid_density, opts.max_grid_points)) push(z, SampleOrigin::Grid);

  const GeneratorSet cone = semiring_of(gens);
  const SampleSet sample_set = SampleSet::create(f, cone, std::move(samples));
  IdealBasis variety;
  variety.role = IdealRole::Variety;
  for (std::size_t i : vanishing) variety.generators.push_back(gens[i]);

  CheckReport inner = check_boundary_theorem(f, cone, vanishing, variety, n - eq_rank, sample_set, opts.degree);
  for (auto& c : inner.conditions) report.add(std::move(c));
  report.notes = std::move(inner.notes);
  report.notes.push_back("positivity of f on K outside F is assumed, not checked");
  report.finalize();
  return report;
}

CheckReport check_interior_theorem(const Polynomial& f, const GeneratorSet& cone, const IdealBasis& variety,
                                   std::size_t variety_dim, const SampleSet& samples, int degree,
                                   bool lci_asserted) {
  cone.validate();
  variety.validate();
  const std::size_t n = cone.dim();
  require_dim(f, n, "interior target");
  if (variety.dim() != n) throw DimensionMismatch("variety and cone live in different dimensions");
  if (variety_dim > n) throw PreconditionError("declared dimension of V exceeds the ambient dimension");

  CheckReport report;
  report.theorem = "interior";
  try {
    const auto r = ideal_membership(f, ideal_square(variety), degree);
    if (std::holds_alternative<Cofactors>(r)) {
      report.add(condition("square-ideal-membership", Verdict::Verified, "f in J^2, cofactor degree <= " +
                                                                             std::to_string(degree)));
    } else {
      report.add(condition("square-ideal-membership", Verdict::Inconclusive,
                           "no cofactors of degree <= " + std::to_string(degree)));
    }
  } catch (const CapExceeded& e) {
    report.add(condition("square-ideal-membership", Verdict::Inconclusive, e.what()));
  }
  report.add(condition("local-complete-intersection", lci_asserted ? Verdict::Verified : Verdict::Inconclusive,
                       lci_asserted ? "asserted by user, not verified" : "not asserted"));

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Point& z = samples.samples()[k].z;
    const std::size_t idx = k + 1;
    const auto tangent = variety_at(report, variety, variety_dim, z, idx);
    if (!tangent) continue;

    const Vector grad = gradient(f, z);
    if (std::any_of(grad.begin(), grad.end(), [](const Rational& x) { return x != 0; })) {
      report.add(violated("gradient-zero", idx, {z, grad, dot(grad, grad), "D_v f(z)"}));
      continue;
    }
    report.add(condition("gradient-zero", Verdict::Verified, {}, idx));

    const Matrix h = hessian(f, z);
    const PsdResult psd = check_psd(h);
    if (!psd.psd) {
      if (!tangent->contains(psd.negative_direction)) {
        report.add(violated("hessian-psd", idx, {z, psd.negative_direction, psd.negative_value, "H[v,v]"}));
      } else {
        report.add(condition("hessian-psd", Verdict::Inconclusive, "negative direction lies in T_z(V)", idx));
      }
      continue;
    }
    report.add(condition("hessian-psd", Verdict::Verified, {}, idx));

    bool kernel_ok = true;
    for (const auto& v : nullspace(h)) {
      if (!tangent->contains(v)) {
        report.add(violated("hessian-kernel-tangent", idx, {z, v, bilinear(h, v, v), "H[v,v]"},
                            "kernel vector outside T_z(V)"));
        kernel_ok = false;
        break;
      }
    }
    if (kernel_ok) report.add(condition("hessian-kernel-tangent", Verdict::Verified, {}, idx));
  }
  if (samples.empty()) report.add(condition("samples", Verdict::Inconclusive, "no samples to check"));
  report.notes.push_back("pointwise conditions checked on " + std::to_string(samples.size()) + " sample(s) only");
  report.finalize();
  return report;
}

}  // namespace posate
