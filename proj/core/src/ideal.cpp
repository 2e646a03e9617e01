#include "posate/ideal.hpp"

#include "posate/errors.hpp"

#include <map>

namespace posate {

std::size_t IdealBasis::dim() const { return generators.empty() ? 0 : generators.front().dim(); }

void IdealBasis::validate() const {
  if (generators.empty()) throw PreconditionError("ideal basis must be nonempty");
  for (const auto& g : generators) require_dim(g, dim(), "ideal generator");
}

std::variant<Cofactors, MembershipNotFound> ideal_membership(const Polynomial& f, const IdealBasis& ideal,
                                                             int degree, std::size_t cap) {
  ideal.validate();
  require_dim(f, ideal.dim(), "ideal membership target");
  if (degree < 0) throw PreconditionError("ideal_membership needs degree >= 0");
  const std::size_t n = ideal.dim();
  const std::vector<Monomial> multipliers = monomials_up_to(n, static_cast<unsigned>(degree));
  const std::size_t unknowns = multipliers.size() * ideal.generators.size();
  if (unknowns > cap) {
    throw CapExceeded("ideal_membership: " + std::to_string(unknowns) + " unknowns exceed cap " + std::to_string(cap));
  }

  std::map<Monomial, std::size_t, GrlexLess> row_of;
  for (const auto& [m, c] : f.terms()) row_of.emplace(m, 0);
  for (const auto& g : ideal.generators) {
    for (const auto& mu : multipliers) {
      for (const auto& [m, c] : g.terms()) row_of.emplace(mu * m, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [m, idx] : row_of) idx = next++;
  if (row_of.size() > cap) throw CapExceeded("ideal_membership: coefficient system exceeds cap");

  Matrix a(row_of.size(), unknowns);
  Vector b(row_of.size());
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    for (std::size_t k = 0; k < multipliers.size(); ++k) {
      const std::size_t col = i * multipliers.size() + k;
      for (const auto& [m, c] : ideal.generators[i].terms()) a(row_of.at(multipliers[k] * m), col) += c;
    }
  }
  for (const auto& [m, c] : f.terms()) b[row_of.at(m)] = c;

  const auto x = solve_linear(a, b);
  if (!x) return MembershipNotFound{degree};
  Cofactors out;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    Polynomial cof(n);
    for (std::size_t k = 0; k < multipliers.size(); ++k) cof.add_term(multipliers[k], (*x)[i * multipliers.size() + k]);
    out.cofactors.push_back(std::move(cof));
  }
  return out;
}

Polynomial combine(const Cofactors& cofactors, const IdealBasis& ideal) {
  if (cofactors.cofactors.size() != ideal.generators.size()) {
    throw DimensionMismatch("combine: one cofactor per generator required");
  }
  Polynomial sum(ideal.dim());
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) sum += cofactors.cofactors[i] * ideal.generators[i];
  return sum;
}

IdealBasis ideal_square(const IdealBasis& ideal) {
  ideal.validate();
  IdealBasis sq;
  sq.role = ideal.role;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i)
    for (std::size_t j = i; j < ideal.generators.size(); ++j)
      sq.generators.push_back(ideal.generators[i] * ideal.generators[j]);
  return sq;
}

bool TangentSpace::contains(const Vector& v) const {
  for (const auto& x : jacobian * v) {
    if (x != 0) return false;
  }
  return true;
}

TangentSpace tangent_space(const IdealBasis& variety, const Point& z) {
  variety.validate();
  require_dim(z, variety.dim(), "tangent space point");
  const std::size_t n = variety.dim();
  TangentSpace t;
  t.jacobian = Matrix(variety.generators.size(), n);
  for (std::size_t i = 0; i < variety.generators.size(); ++i) {
    const Polynomial& g = variety.generators[i];
    if (evaluate(g, z) != 0) {
      throw PreconditionError("point " + to_string(z) + " is not on the variety: generator " + format(g) +
                              " evaluates to " + to_string(evaluate(g, z)));
    }
    const Vector grad = gradient(g, z);
    for (std::size_t j = 0; j < n; ++j) t.jacobian(i, j) = grad[j];
  }
  t.rank = rank(t.jacobian);
  t.basis = nullspace(t.jacobian);
  return t;
}

bool is_nonsingular(const TangentSpace& tangent, std::size_t ambient_dim, std::size_t declared_dim) {
  return declared_dim <= ambient_dim && tangent.rank == ambient_dim - declared_dim;
}

}  // namespace posate
