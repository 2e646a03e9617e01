#include "posate/witness.hpp"

#include "posate/errors.hpp"
#include "posate/ideal.hpp"
#include "posate/polytope.hpp"
#include "posate/rays.hpp"

#include <algorithm>
#include <sstream>

namespace posate {

std::string_view to_string(StateType t) { return t == StateType::TypeI ? "type-I" : "type-II"; }

std::string_view to_string(Justification j) {
  return j == Justification::Unconditional ? "unconditional" : "conditional";
}

namespace {

constexpr int kRadiusSteps = 64;

std::vector<Polynomial> all_generators(const GeneratorSet& cone) {
  std::vector<Polynomial> out = cone.generators;
  out.insert(out.end(), cone.module_generators.begin(), cone.module_generators.end());
  return out;
}

Point step(const Point& z, const Vector& v, const Rational& eps) {
  Point p(z);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += eps * v[i];
  return p;
}

// Halving search from ε = 1 for a point of X(M) on the ray where f < 0.
std::optional<Rational> negativity_radius(const Polynomial& f, const GeneratorSet& cone, const Point& z,
                                          const Vector& v) {
  Rational eps = 1;
  for (int k = 0; k < kRadiusSteps; ++k, eps /= 2) {
    const Point p = step(z, v, eps);
    if (cone.contains_point(p) && evaluate(f, p) < 0) return eps;
  }
  return std::nullopt;
}

WitnessResult with_radius(const Polynomial& f, const GeneratorSet& cone, Witness w, const Point& z, const Vector& v) {
  const auto eps = negativity_radius(f, cone, z, v);
  if (!eps) return Rejection{"no negativity radius found in " + std::to_string(kRadiusSteps) + " halvings", true};
  RefutationReport r;
  r.witness = std::move(w);
  r.radius = *eps;
  r.point = step(z, v, *eps);
  return r;
}

void require_in_set(const GeneratorSet& cone, const Point& z, const char* what) {
  require_dim(z, cone.dim(), what);
  if (!cone.contains_point(z)) throw PreconditionError(std::string(what) + " " + to_string(z) + " is outside X(M)");
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

const RefutationReport* accepted(const WitnessResult& r) { return std::get_if<RefutationReport>(&r); }
const RefutationReport* accepted(WitnessResult&&) = delete;

// First-order candidates: the generators of the cone of directions that keep
// the active constraints to first order, or -∇f when none is active.
std::optional<RefutationReport> first_order_search(const Polynomial& f, const GeneratorSet& cone, const Point& z) {
  const std::size_t n = cone.dim();
  const Vector grad = gradient(f, z);
  if (is_zero(grad)) return std::nullopt;
  std::vector<Vector> active_rows;
  for (const auto& g : all_generators(cone)) {
    if (evaluate(g, z) == 0) active_rows.push_back(gradient(g, z));
  }
  std::vector<Vector> candidates;
  std::vector<Vector> rays;
  if (active_rows.empty()) {
    Vector v = grad;
    for (auto& x : v) x = -x;
    candidates.push_back(std::move(v));
  } else {
    const RayDecomposition dec = extreme_rays(Matrix::from_rows(active_rows, n));
    rays = dec.rays;
    for (const auto& r : dec.rays) candidates.push_back(r);
    for (const auto& w : dec.lineality) {
      candidates.push_back(w);
      Vector neg = w;
      for (auto& x : neg) x = -x;
      candidates.push_back(std::move(neg));
    }
  }
  // Relative-interior direction used to tilt candidates off nonlinear constraints.
  Vector centre(n);
  for (const auto& r : rays) {
    for (std::size_t i = 0; i < n; ++i) centre[i] += r[i];
  }
  for (const auto& v : candidates) {
    if (dot(grad, v) >= 0) continue;
    const auto r = first_order_witness(f, cone, z, v);
    if (const auto* ok = accepted(r)) return *ok;
    if (!std::get<Rejection>(r).inconclusive || is_zero(centre)) continue;
    Rational t = 1;
    for (int k = 0; k < kRadiusSteps; ++k, t /= 2) {
      const Vector tilted = step(v, centre, t);
      if (dot(grad, tilted) >= 0) continue;
      const auto r2 = first_order_witness(f, cone, z, tilted);
      if (const auto* ok = accepted(r2)) return *ok;
    }
  }
  return std::nullopt;
}

}  // namespace

WitnessResult type1_witness(const Polynomial& f, const GeneratorSet& cone, const Point& z) {
  cone.validate();
  require_dim(f, cone.dim(), "witness target");
  require_dim(z, cone.dim(), "witness point");
  if (!cone.contains_point(z)) return Rejection{"point is outside X(M)"};
  const Rational v = evaluate(f, z);
  if (v >= 0) return Rejection{"f(z) = " + to_string(v) + " is not negative"};
  RefutationReport r;
  r.witness = {TypeIWitness{z}, v};
  r.point = z;
  return r;
}

WitnessResult first_order_witness(const Polynomial& f, const GeneratorSet& cone, const Point& z, const Vector& v) {
  cone.validate();
  require_dim(f, cone.dim(), "witness target");
  require_dim(v, cone.dim(), "witness direction");
  require_in_set(cone, z, "first-order witness point");
  if (evaluate(f, z) != 0) throw PreconditionError("first-order witness needs f(z) = 0");
  for (const auto& g : all_generators(cone)) {
    if (evaluate(g, z) != 0) continue;
    const Rational d = directional_derivative(g, z, v);
    if (d > 0 || (d == 0 && g.is_affine())) continue;
    if (d < 0) return Rejection{"direction leaves X(M) through " + format(g)};
    return Rejection{"inwardness not certifiable: D_v g = 0 for nonlinear active " + format(g), true};
  }
  const Rational dv = directional_derivative(f, z, v);
  if (dv >= 0) return Rejection{"D_v f(z) = " + to_string(dv) + " is not negative"};
  return with_radius(f, cone, {FirstOrderWitness{z, v}, dv}, z, v);
}

WitnessResult second_order_witness(const Polynomial& f, const GeneratorSet& cone, const Point& z, const Vector& v) {
  cone.validate();
  require_dim(f, cone.dim(), "witness target");
  require_dim(v, cone.dim(), "witness direction");
  require_dim(z, cone.dim(), "witness point");
  for (const auto& g : all_generators(cone)) {
    if (evaluate(g, z) <= 0) throw PreconditionError("second-order witness needs z interior: " + format(g) + " <= 0");
  }
  if (evaluate(f, z) != 0) throw PreconditionError("second-order witness needs f(z) = 0");
  if (!is_zero(gradient(f, z))) throw PreconditionError("second-order witness needs a vanishing gradient");
  const Rational q = hessian_form(f, z, v);
  if (q >= 0) return Rejection{"D²f(z)[v,v] = " + to_string(q) + " is not negative"};
  return with_radius(f, cone, {SecondOrderWitness{z, v}, q}, z, v);
}

std::optional<RefutationReport> witness_search(const Polynomial& f, const GeneratorSet& cone,
                                               const SampleSet& samples, const WitnessSearchOptions& opts) {
  cone.validate();
  require_dim(f, cone.dim(), "witness target");
  const auto gens = all_generators(cone);
  for (const auto& sample : samples.samples()) {
    const Point& z = sample.z;
    const bool interior = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return evaluate(g, z) > 0; });
    if (interior && is_zero(gradient(f, z))) {
      const PsdResult psd = check_psd(hessian(f, z));
      if (psd.psd) continue;
      const WitnessResult r = second_order_witness(f, cone, z, psd.negative_direction);
      if (const auto* ok = accepted(r)) return *ok;
      continue;
    }
    if (auto r = first_order_search(f, cone, z)) return r;
  }

  const bool linear = !gens.empty() && std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_affine(); });
  if (linear && polytope_status(gens) == PolytopeStatus::Compact) {
    std::vector<Point> points = polytope_vertices(gens);
    for (auto& p : barycentric_grid(points, opts.grid_density, opts.max_grid_points)) points.push_back(std::move(p));
    for (const auto& z : points) {
      const WitnessResult r = type1_witness(f, cone, z);
      if (const auto* ok = accepted(r)) return *ok;
    }
  }
  return std::nullopt;
}

WitnessResult quotient_witness(const Polynomial& f, const GeneratorSet& cone, std::size_t generator,
                               const Point& z0, bool hypotheses_asserted, int degree) {
  cone.validate();
  const std::size_t n = cone.dim();
  require_dim(f, n, "witness target");
  require_dim(z0, n, "quotient evaluation point");
  if (cone.kind != ConeKind::QuadraticModule) throw PreconditionError("quotient witness needs a quadratic module");
  if (generator >= cone.generators.size()) throw PreconditionError("distinguished generator index out of range");
  const Polynomial& g = cone.generators[generator];
  if (!g.is_affine() || g.is_constant()) {
    throw PreconditionError("distinguished generator must be affine-linear and nonconstant: " + format(g));
  }
  if (evaluate(g, z0) != 0) throw PreconditionError("quotient evaluation point must satisfy g(z0) = 0");
  if (!hypotheses_asserted) return Rejection{"quotient hypotheses not asserted", true};

  IdealBasis ideal;
  ideal.generators = {g};
  if (!std::holds_alternative<Cofactors>(ideal_membership(f, ideal, std::max(degree, 0)))) {
    return Rejection{"f not certified in (g) with cofactor degree <= " + std::to_string(degree), true};
  }

  // Affine change of variables: D_w g = 1 with w along the first coordinate g depends on.
  const Vector a = linear_part(g);
  Vector w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) {
      w[i] = 1 / a[i];
      break;
    }
  }
  const Rational value = directional_derivative(f, z0, w);
  if (value >= 0) return Rejection{"φ(f) = " + to_string(value) + " is not negative"};
  RefutationReport r;
  r.witness = {QuotientWitness{generator, z0, w}, value};
  r.justification = Justification::Conditional;
  return r;
}

StateType classify(const Witness& w) {
  return std::holds_alternative<TypeIWitness>(w.state) ? StateType::TypeI : StateType::TypeII;
}

bool verify_refutation(const Polynomial& f, const GeneratorSet& cone, const RefutationReport& report) {
  try {
    if (report.witness.value >= 0) return false;
    if (report.point) {
      if (!cone.contains_point(*report.point) || evaluate(f, *report.point) >= 0) return false;
    }
    return std::visit(
        [&](const auto& s) -> bool {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, TypeIWitness>) {
            return cone.contains_point(s.z) && evaluate(f, s.z) == report.witness.value;
          } else if constexpr (std::is_same_v<T, QuotientWitness>) {
            const auto r = quotient_witness(f, cone, s.generator, s.z0, true);
            const auto* ok = std::get_if<RefutationReport>(&r);
            return ok && ok->witness.value == report.witness.value;
          } else {
            if (!report.radius || !report.point || *report.point != step(s.z, s.v, *report.radius)) return false;
            WitnessResult r;
            if constexpr (std::is_same_v<T, FirstOrderWitness>) {
              r = first_order_witness(f, cone, s.z, s.v);
            } else {
              r = second_order_witness(f, cone, s.z, s.v);
            }
            const auto* ok = std::get_if<RefutationReport>(&r);
            return ok && ok->witness.value == report.witness.value;
          }
        },
        report.witness.state);
  } catch (const PreconditionError&) {
    return false;
  }
}

std::string serialize(const RefutationReport& report) {
  std::ostringstream out;
  out << "witness";
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TypeIWitness>) {
          out << " kind=type-I z=" << to_string(s.z);
        } else if constexpr (std::is_same_v<T, FirstOrderWitness>) {
          out << " kind=first-order z=" << to_string(s.z) << " v=" << to_string(s.v);
        } else if constexpr (std::is_same_v<T, SecondOrderWitness>) {
          out << " kind=second-order z=" << to_string(s.z) << " v=" << to_string(s.v);
        } else {
          out << " kind=quotient generator=" << s.generator + 1 << " z0=" << to_string(s.z0) << " w=" << to_string(s.w);
        }
      },
      report.witness.state);
  out << " value=" << to_string(report.witness.value) << " class=" << to_string(classify(report.witness))
      << " justification=" << to_string(report.justification);
  if (report.radius) out << " radius=" << to_string(*report.radius);
  if (report.point) out << " point=" << to_string(*report.point);
  return out.str();
}

}  // namespace posate
