#pragma once

#include "posate/matrix.hpp"
#include "posate/polynomial.hpp"

#include <variant>
#include <vector>

namespace posate {

enum class IdealRole { Constraint, Variety };

/// Generators of an ideal: the constraint ideal I = (g_1..g_r) or the
/// vanishing ideal J of a variety V.
struct IdealBasis {
  std::vector<Polynomial> generators;
  IdealRole role = IdealRole::Constraint;

  std::size_t dim() const;
  void validate() const;
};

struct Cofactors {
  std::vector<Polynomial> cofactors;
};

/// No cofactors of the requested degree exist. Inconclusive about membership.
struct MembershipNotFound {
  int degree = 0;
};

inline constexpr std::size_t kDefaultSystemCap = 20000;

/// f = sum a_i g_i with deg a_i <= degree, by exact linear algebra on coefficients.
std::variant<Cofactors, MembershipNotFound> ideal_membership(const Polynomial& f, const IdealBasis& ideal,
                                                             int degree, std::size_t cap = kDefaultSystemCap);

/// sum a_i g_i.
Polynomial combine(const Cofactors& cofactors, const IdealBasis& ideal);

/// Pairwise products g_i g_j (i <= j): generators of the squared ideal.
IdealBasis ideal_square(const IdealBasis& ideal);

/// T_z(V) as the kernel of the Jacobian of the J-generators at z.
struct TangentSpace {
  Matrix jacobian;
  std::vector<Vector> basis;
  std::size_t rank = 0;

  bool contains(const Vector& v) const;
};

/// Throws PreconditionError when some generator does not vanish at z.
TangentSpace tangent_space(const IdealBasis& variety, const Point& z);

/// Rank criterion for a nonsingular point of V with declared dimension.
bool is_nonsingular(const TangentSpace& tangent, std::size_t ambient_dim, std::size_t declared_dim);

}  // namespace posate
