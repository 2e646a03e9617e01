#pragma once

#include "posate/certificate.hpp"
#include "posate/cone.hpp"
#include "posate/ideal.hpp"
#include "posate/report.hpp"

#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace posate {

enum class SampleOrigin { User, Vertex, Grid };

std::string_view to_string(SampleOrigin origin);

struct Sample {
  Point z;
  SampleOrigin origin = SampleOrigin::User;
};

/// Finite stand-in for Z(f) ∩ X(M): every point is checked exactly at
/// construction to satisfy f(z) = 0 and g(z) >= 0 for every generator.
class SampleSet {
 public:
  static SampleSet create(const Polynomial& f, const GeneratorSet& cone, std::vector<Sample> samples);

  const std::vector<Sample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

 private:
  std::vector<Sample> samples_;
};

struct ConeOk {};

/// v in the cone {D_v g_i(z) >= 0}, v outside T_z(V), with D_v f(z) <= 0.
struct ConeViolation {
  Vector direction;
  Rational derivative;
};

using ConeConditionResult = std::variant<ConeOk, ConeViolation>;

/// Checks "D_v g_i(z) >= 0 for all i and v ∉ T_z(V) imply D_v f(z) > 0" exactly,
/// through the extreme rays and lineality space of the polyhedral cone.
ConeConditionResult cone_condition(const Polynomial& f, const std::vector<Polynomial>& constraint_gens,
                                   const IdealBasis& variety, const Point& z);

/// Re-verifies a cone-condition counterexample from scratch.
bool verify_cone_violation(const Polynomial& f, const std::vector<Polynomial>& constraint_gens,
                           const IdealBasis& variety, const Point& z, const Vector& v);

struct SumbitiTerm {
  Polynomial b;
  Polynomial s;
  /// Membership of s in the semiring; found by a short search when absent.
  std::optional<Certificate> s_certificate;
};

struct SumbitiOptions {
  /// When set, tries to certify b_i - epsilon on the whole set.
  std::optional<Rational> epsilon;
  int degree = 8;
  std::size_t basis_cap = kDefaultBasisCap;
};

/// Hypotheses of the f = sum b_i s_i criterion. Throws PreconditionError when
/// the identity does not hold exactly.
CheckReport check_sumbiti(const Polynomial& f, const std::vector<SumbitiTerm>& decomposition, const GeneratorSet& cone,
                          const SampleSet& samples, const SumbitiOptions& opts = {});

/// Hypotheses of the boundary-zero criterion: (1) f ∈ (g_i : i in constraint_indices)
/// with cofactors of degree <= `degree`, (2) the cone condition and (3)
/// nonsingularity of V (declared dimension) at every sample.
CheckReport check_boundary_theorem(const Polynomial& f, const GeneratorSet& cone,
                                   const std::vector<std::size_t>& constraint_indices, const IdealBasis& variety,
                                   std::size_t variety_dim, const SampleSet& samples, int degree);

struct PolytopeFaceOptions {
  int degree = 4;
  unsigned grid_density = 5;
  std::size_t max_grid_points = 2000;
};

/// Face criterion on a compact polytope K = {g_i >= 0} with F = K ∩ {g_i = 0 : i ∈ face}.
/// Samples: user points (first), then the vertices of F, then a barycentric grid.
CheckReport check_polytope_face(const Polynomial& f, const std::vector<Polynomial>& gens,
                                const std::set<std::size_t>& face, const std::vector<Point>& user_samples,
                                const PolytopeFaceOptions& opts = {});

/// Hypotheses of the interior-zero criterion at every sample: nonsingularity,
/// vanishing gradient, Hessian PSD with kernel inside T_z(V); globally f ∈ J².
CheckReport check_interior_theorem(const Polynomial& f, const GeneratorSet& cone, const IdealBasis& variety,
                                   std::size_t variety_dim, const SampleSet& samples, int degree,
                                   bool lci_asserted);

/// Points of the principal lattice of order `density` in conv(vertices), deduplicated.
std::vector<Point> barycentric_grid(const std::vector<Point>& vertices, unsigned density, std::size_t max_points);

}  // namespace posate
