#pragma once

#include "posate/cone.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace posate {

/// c · square² · h_module · g^alpha with c > 0.
struct CertificateTerm {
  std::vector<unsigned> alpha;
  std::size_t module = 0;
  std::optional<Polynomial> square;
  Rational coeff;
};

/// Nonnegative combination of cone products representing a polynomial exactly.
struct Certificate {
  std::vector<CertificateTerm> terms;
  /// Degree of the truncation the certificate was found at.
  int degree = 0;

  /// Sorts terms lexicographically by (alpha, module, square text).
  void canonicalize();
};

/// Value of one term (coefficient included).
Polynomial expand(const CertificateTerm& term, const GeneratorSet& gens);
Polynomial expand(const Certificate& cert, const GeneratorSet& gens);

/// True iff every coefficient is positive and the terms sum to f exactly.
/// Throws PreconditionError when an index does not fit the generator set or kind.
bool verify_certificate(const Polynomial& f, const Certificate& cert, const GeneratorSet& gens);

/// One line per term: `alpha=(i1,...,is) coeff=p/q` optionally followed by
/// `module=j` and `square=<polynomial>`; first line `# degree=d`.
std::string serialize(const Certificate& cert, const std::vector<std::string>& names = {});
Certificate parse_certificate(std::string_view text, std::size_t dim, const std::vector<std::string>& names = {});

}  // namespace posate
