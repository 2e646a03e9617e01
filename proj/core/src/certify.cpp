#include "posate/certify.hpp"

#include "posate/errors.hpp"

#include <algorithm>

namespace posate {

Rational SeparatingFunctional::apply(const Polynomial& p) const {
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) {
    auto it = weights.find(m);
    if (it != weights.end()) s += c * it->second;
  }
  return s;
}

DegreeResult certify_at_degree(const Polynomial& f, const GeneratorSet& gens, int degree, std::size_t basis_cap,
                               const SolverOptions& solver) {
  gens.validate();
  require_dim(f, gens.dim(), "certified polynomial");
  const std::vector<BasisElement> basis = cone_basis(gens, degree, basis_cap);

  // Rows: every monomial in the support of f or of a basis element.
  std::map<Monomial, std::size_t, GrlexLess> row_of;
  for (const auto& [m, c] : f.terms()) row_of.emplace(m, 0);
  for (const auto& e : basis) {
    for (const auto& [m, c] : e.value.terms()) row_of.emplace(m, 0);
  }
  std::vector<Monomial> monomials;
  for (auto& [m, idx] : row_of) {
    idx = monomials.size();
    monomials.push_back(m);
  }

  LinearSystem sys;
  sys.a = Matrix(monomials.size(), basis.size());
  sys.b.assign(monomials.size(), 0);
  sys.signs.assign(basis.size(), VarSign::Nonnegative);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [m, c] : basis[j].value.terms()) sys.a(row_of.at(m), j) = c;
  }
  for (const auto& [m, c] : f.terms()) sys.b[row_of.at(m)] = c;

  SolveResult result = solve(sys, solver);
  if (auto* feasible = std::get_if<Feasible>(&result)) {
    Certificate cert;
    cert.degree = degree;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (feasible->x[j] == 0) continue;
      cert.terms.push_back({basis[j].alpha, basis[j].module, basis[j].square, feasible->x[j]});
    }
    cert.canonicalize();
    return cert;
  }
  // Farkas y: yᵗA <= 0, yᵗb > 0. The state-like functional is -y.
  const auto& y = std::get<Infeasible>(result).certificate.y;
  SeparatingFunctional phi;
  phi.degree = degree;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (y[i] != 0) phi.weights.emplace(monomials[i], -y[i]);
  }
  return phi;
}

CertifyResult handelman_certify(const Polynomial& f, const GeneratorSet& gens, const CertifyOptions& opts) {
  gens.validate();
  int start = opts.start_degree.value_or(std::max(0, f.is_zero() ? 0 : f.degree()));
  if (!opts.start_degree) {
    for (const auto& g : gens.generators) start = std::max(start, g.is_zero() ? 0 : g.degree());
  }
  NotFoundAtDegree failure;
  failure.max_degree = opts.max_degree;
  for (int d = start; d <= opts.max_degree; ++d) {
    DegreeResult r = certify_at_degree(f, gens, d, opts.basis_cap, opts.solver);
    if (auto* cert = std::get_if<Certificate>(&r)) return std::move(*cert);
    failure.rounds.push_back({d, std::get<SeparatingFunctional>(std::move(r))});
  }
  return failure;
}

bool verify_separation(const Polynomial& f, const GeneratorSet& gens, const SeparatingFunctional& functional,
                       std::size_t basis_cap) {
  if (functional.apply(f) >= 0) return false;
  for (const auto& e : cone_basis(gens, functional.degree, basis_cap)) {
    if (functional.apply(e.value) < 0) return false;
  }
  return true;
}

}  // namespace posate
