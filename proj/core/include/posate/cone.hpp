#pragma once

#include "posate/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace posate {

enum class ConeKind { Semiring, SemiringModule, QuadraticModule, Preordering };

std::string_view to_string(ConeKind kind);
ConeKind parse_cone_kind(std::string_view text);

/// A finitely generated cone: the semiring, module, quadratic module or
/// preordering generated by g_1..g_s (plus module generators h_1..h_m for
/// the semiring-module kind). X(M) is {g_i >= 0, h_j >= 0}.
struct GeneratorSet {
  ConeKind kind = ConeKind::Semiring;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> module_generators;

  std::size_t dim() const;
  void validate() const;

  /// True iff z lies in X(M): every generator is >= 0 at z.
  bool contains_point(const Point& z) const;
};

/// Default cap on the number of basis products enumerated.
inline constexpr std::size_t kDefaultBasisCap = 20000;

/// One element of a cone basis: coeff-free product
///   square² · h_module · g^alpha
/// with module 0 standing for the constant module generator 1 and an empty
/// square standing for 1.
struct BasisElement {
  std::vector<unsigned> alpha;
  std::size_t module = 0;
  std::optional<Polynomial> square;
  Polynomial value;
};

/// Generator products of degree <= max_degree:
///  - semiring / semiring-module: g^alpha with alpha in N^s (times 1, h_1..h_m for modules);
///  - preordering: squarefree products (alpha in {0,1}^s), max_degree < 0 means no degree bound;
///  - quadratic module: 1 and the bare generators.
std::vector<BasisElement> product_basis(const GeneratorSet& gens, int max_degree,
                                        std::size_t cap = kDefaultBasisCap);

/// Generators of the LP truncation of the cone at degree d.
///
/// Semiring kinds use product_basis unchanged. Preorderings and quadratic
/// modules multiply their products by the diagonally dominant squares m²,
/// (m_i + m_j)², (m_i - m_j)² of monomials, which keeps the search a linear
/// program while staying inside the cone.
std::vector<BasisElement> cone_basis(const GeneratorSet& gens, int degree, std::size_t cap = kDefaultBasisCap);

/// Bases of the square multipliers used by cone_basis, up to the given degree.
std::vector<Polynomial> square_bases(std::size_t dim, unsigned max_base_degree);

}  // namespace posate
