#include "posate/cone.hpp"

#include "posate/errors.hpp"

#include <algorithm>

namespace posate {

std::string_view to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::Semiring: return "semiring";
    case ConeKind::SemiringModule: return "semiring-module";
    case ConeKind::QuadraticModule: return "quadratic-module";
    case ConeKind::Preordering: return "preordering";
  }
  return "semiring";
}

ConeKind parse_cone_kind(std::string_view text) {
  if (text == "semiring") return ConeKind::Semiring;
  if (text == "semiring-module") return ConeKind::SemiringModule;
  if (text == "quadratic-module") return ConeKind::QuadraticModule;
  if (text == "preordering") return ConeKind::Preordering;
  throw ParseError("unknown cone kind '" + std::string(text) + "'");
}

std::size_t GeneratorSet::dim() const { return generators.empty() ? 0 : generators.front().dim(); }

void GeneratorSet::validate() const {
  if (generators.empty()) throw PreconditionError("generator set must contain at least one generator");
  const std::size_t n = dim();
  for (const auto& g : generators) require_dim(g, n, "generator");
  for (const auto& h : module_generators) require_dim(h, n, "module generator");
  if (kind != ConeKind::SemiringModule && !module_generators.empty()) {
    throw PreconditionError("module generators are only meaningful for the semiring-module kind");
  }
}

bool GeneratorSet::contains_point(const Point& z) const {
  for (const auto& g : generators) {
    if (evaluate(g, z) < 0) return false;
  }
  for (const auto& h : module_generators) {
    if (evaluate(h, z) < 0) return false;
  }
  return true;
}

namespace {

int effective_degree(const Polynomial& p) { return p.is_zero() ? 0 : p.degree(); }

// Enumerates alpha with sum alpha_i * deg(g_i) <= budget. Generators of degree 0
// (constants) get exponent at most 1 so the enumeration stays finite.
void enumerate_products(const std::vector<Polynomial>& gens, std::size_t pos, int budget, bool squarefree,
                        std::vector<unsigned>& alpha, const Polynomial& acc, std::vector<BasisElement>& out,
                        std::size_t cap) {
  if (pos == gens.size()) {
    if (out.size() >= cap) throw CapExceeded("product basis exceeds cap of " + std::to_string(cap));
    out.push_back({alpha, 0, std::nullopt, acc});
    return;
  }
  const int deg = effective_degree(gens[pos]);
  const unsigned max_e = (squarefree || deg == 0) ? 1u : static_cast<unsigned>(budget / deg);
  Polynomial power = acc;
  for (unsigned e = 0; e <= max_e; ++e) {
    if (e > 0) {
      if (budget < static_cast<int>(e) * deg) break;
      power *= gens[pos];
    }
    alpha[pos] = e;
    enumerate_products(gens, pos + 1, budget - static_cast<int>(e) * deg, squarefree, alpha, power, out, cap);
  }
  alpha[pos] = 0;
}

void sort_basis(std::vector<BasisElement>& basis) {
  std::stable_sort(basis.begin(), basis.end(), [](const BasisElement& a, const BasisElement& b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a.alpha) da += e;
    for (unsigned e : b.alpha) db += e;
    if (da != db) return da < db;
    if (a.alpha != b.alpha) return a.alpha > b.alpha;
    return a.module < b.module;
  });
}

}  // namespace

std::vector<BasisElement> product_basis(const GeneratorSet& gens, int max_degree, std::size_t cap) {
  gens.validate();
  const std::size_t s = gens.generators.size();
  const std::size_t n = gens.dim();
  std::vector<BasisElement> out;
  std::vector<unsigned> alpha(s, 0);
  const Polynomial one = Polynomial::constant(n, 1);

  switch (gens.kind) {
    case ConeKind::QuadraticModule: {
      out.push_back({alpha, 0, std::nullopt, one});
      for (std::size_t i = 0; i < s; ++i) {
        if (max_degree >= 0 && effective_degree(gens.generators[i]) > max_degree) continue;
        std::vector<unsigned> a(s, 0);
        a[i] = 1;
        out.push_back({a, 0, std::nullopt, gens.generators[i]});
      }
      break;
    }
    case ConeKind::Preordering: {
      int budget = max_degree;
      if (budget < 0) {
        budget = 0;
        for (const auto& g : gens.generators) budget += effective_degree(g);
      }
      enumerate_products(gens.generators, 0, budget, true, alpha, one, out, cap);
      break;
    }
    case ConeKind::Semiring:
      if (max_degree < 0) throw PreconditionError("semiring product basis needs a finite degree");
      enumerate_products(gens.generators, 0, max_degree, false, alpha, one, out, cap);
      break;
    case ConeKind::SemiringModule: {
      if (max_degree < 0) throw PreconditionError("semiring product basis needs a finite degree");
      std::vector<Polynomial> modules{one};
      modules.insert(modules.end(), gens.module_generators.begin(), gens.module_generators.end());
      for (std::size_t j = 0; j < modules.size(); ++j) {
        const int budget = max_degree - effective_degree(modules[j]);
        if (budget < 0) continue;
        std::vector<BasisElement> part;
        enumerate_products(gens.generators, 0, budget, false, alpha, modules[j], part, cap);
        for (auto& e : part) {
          e.module = j;
          if (out.size() >= cap) throw CapExceeded("product basis exceeds cap of " + std::to_string(cap));
          out.push_back(std::move(e));
        }
      }
      break;
    }
  }
  sort_basis(out);
  return out;
}

std::vector<Polynomial> square_bases(std::size_t dim, unsigned max_base_degree) {
  const std::vector<Monomial> monos = monomials_up_to(dim, max_base_degree);
  std::vector<Polynomial> out;
  for (const auto& m : monos) out.push_back(Polynomial::term(m, 1));
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = i + 1; j < monos.size(); ++j) {
      Polynomial sum = Polynomial::term(monos[i], 1);
      sum.add_term(monos[j], 1);
      Polynomial diff = Polynomial::term(monos[i], 1);
      diff.add_term(monos[j], -1);
      out.push_back(std::move(sum));
      out.push_back(std::move(diff));
    }
  }
  return out;
}

std::vector<BasisElement> cone_basis(const GeneratorSet& gens, int degree, std::size_t cap) {
  if (degree < 0) throw PreconditionError("cone_basis needs a nonnegative degree");
  if (gens.kind == ConeKind::Semiring || gens.kind == ConeKind::SemiringModule) {
    return product_basis(gens, degree, cap);
  }
  const std::vector<BasisElement> products = product_basis(gens, degree, cap);
  const std::size_t n = gens.dim();
  std::vector<BasisElement> out;
  for (const auto& prod : products) {
    const int room = degree - effective_degree(prod.value);
    if (room < 0) continue;
    for (const Polynomial& base : square_bases(n, static_cast<unsigned>(room / 2))) {
      if (out.size() >= cap) throw CapExceeded("cone basis exceeds cap of " + std::to_string(cap));
      BasisElement e{prod.alpha, prod.module, std::nullopt, prod.value};
      if (!(base.is_constant() && base.constant_term() == 1)) {
        e.value = base * base * prod.value;
        e.square = base;
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace posate
