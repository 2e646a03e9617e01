#pragma once

#include "posate/certificate.hpp"
#include "posate/cone.hpp"
#include "posate/lp.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace posate {

/// Linear functional on polynomials of degree <= `degree`, given by its values
/// on monomials (unlisted monomials map to 0).
///
/// Produced from the Farkas certificate of a failed truncated search: it is
/// nonnegative on every generator of the truncated cone and negative on the
/// target, so the target has no certificate at that degree.
struct SeparatingFunctional {
  int degree = 0;
  std::map<Monomial, Rational, GrlexLess> weights;

  Rational apply(const Polynomial& p) const;
};

struct DegreeRefutation {
  int degree = 0;
  SeparatingFunctional functional;
};

/// Search exhausted the degree schedule. This is not a non-membership proof.
struct NotFoundAtDegree {
  int max_degree = 0;
  std::vector<DegreeRefutation> rounds;
};

struct CertifyOptions {
  int max_degree = 8;
  /// First degree tried; defaults to max(deg f, max deg g_i).
  std::optional<int> start_degree;
  std::size_t basis_cap = kDefaultBasisCap;
  SolverOptions solver;
};

using CertifyResult = std::variant<Certificate, NotFoundAtDegree>;
using DegreeResult = std::variant<Certificate, SeparatingFunctional>;

/// One truncated search: f as a nonnegative combination of cone_basis(gens, degree).
DegreeResult certify_at_degree(const Polynomial& f, const GeneratorSet& gens, int degree,
                               std::size_t basis_cap = kDefaultBasisCap, const SolverOptions& solver = {});

/// Degree escalation d = start, start+1, ..., max_degree; the lowest degree wins.
CertifyResult handelman_certify(const Polynomial& f, const GeneratorSet& gens, const CertifyOptions& opts = {});

/// Re-checks that the functional is >= 0 on the whole truncated cone basis and < 0 at f.
bool verify_separation(const Polynomial& f, const GeneratorSet& gens, const SeparatingFunctional& functional,
                       std::size_t basis_cap = kDefaultBasisCap);

}  // namespace posate
