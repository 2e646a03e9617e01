#pragma once

#include "posate/certificate.hpp"
#include "posate/lp.hpp"

#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace posate {

// Polytopes K = {x : g_i(x) >= 0} cut out by affine-linear generators.

enum class PolytopeStatus { Compact, Empty, Unbounded };

std::string_view to_string(PolytopeStatus status);

/// Minkowski hypothesis violated: K is empty or unbounded.
struct NotPolytopeCompact {
  PolytopeStatus reason = PolytopeStatus::Empty;
};

/// A point of K where the target is negative.
struct RefutationPoint {
  Point z;
  Rational value;
};

/// Classifies K (optionally restricted to the face where the listed generators vanish).
PolytopeStatus polytope_status(const std::vector<Polynomial>& gens, const std::set<std::size_t>& active = {});

/// Lexicographically smallest minimiser of an affine objective over K (or a face of K);
/// nullopt when K is empty or the objective is unbounded below.
std::optional<Point> lexmin_minimizer(const Polynomial& objective, const std::vector<Polynomial>& gens,
                                      const std::set<std::size_t>& active = {});

/// Maximum of an affine objective over K (or a face), nullopt when empty or unbounded.
std::optional<Rational> maximum_over(const Polynomial& objective, const std::vector<Polynomial>& gens,
                                     const std::set<std::size_t>& active = {});

using MinkowskiResult = std::variant<Certificate, RefutationPoint, NotPolytopeCompact>;

/// Writes an affine f as c_0 + sum c_i g_i with c >= 0 (as a semiring
/// certificate of degree 1), or returns a point of K with f < 0.
MinkowskiResult minkowski_linear_rep(const Polynomial& f, const std::vector<Polynomial>& gens);

struct ArchimedeanCertificate {
  Integer bound;
  /// Pairs (N - x_i, combo) and (N + x_i, combo) for every variable.
  std::vector<std::pair<Polynomial, Certificate>> combos;
};

/// For compact nonempty K: N with certified combos for N ± x_i, so 1 is an order unit.
std::variant<ArchimedeanCertificate, NotPolytopeCompact> archimedean_polytope_check(
    const std::vector<Polynomial>& gens);

/// Vertices of K (or of the face), sorted and deduplicated. K must be compact.
std::vector<Point> polytope_vertices(const std::vector<Polynomial>& gens, const std::set<std::size_t>& active = {});

/// Semiring generated by the given polynomials.
GeneratorSet semiring_of(std::vector<Polynomial> gens);

}  // namespace posate
