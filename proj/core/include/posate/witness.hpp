#pragma once

#include "posate/checkers.hpp"
#include "posate/cone.hpp"

#include <optional>
#include <string>
#include <variant>

namespace posate {

// Refutations of f ∈ M by states: linear functionals that are >= 0 on the
// cone and negative at f. Evaluation states are type I; derivative-like
// states at a zero of the ideal are type II.

struct TypeIWitness {
  Point z;
};

/// φ(p) = D_v p(z) for an inward direction v.
struct FirstOrderWitness {
  Point z;
  Vector v;
};

/// φ(p) = D²p(z)[v,v] at an interior zero with vanishing gradient.
struct SecondOrderWitness {
  Point z;
  Vector v;
};

/// φ(p) = D_w p(z0) with g(z0) = 0 and D_w g = 1 for the distinguished affine generator g.
struct QuotientWitness {
  std::size_t generator = 0;
  Point z0;
  Vector w;
};

struct Witness {
  std::variant<TypeIWitness, FirstOrderWitness, SecondOrderWitness, QuotientWitness> state;
  /// φ(f), always < 0.
  Rational value;
};

enum class StateType { TypeI, TypeII };

std::string_view to_string(StateType t);

enum class Justification { Unconditional, Conditional };

std::string_view to_string(Justification j);

struct RefutationReport {
  Witness witness;
  /// Step ε along the witness direction with f(z + εv) < 0 and z + εv ∈ X(M).
  std::optional<Rational> radius;
  std::optional<Point> point;
  Justification justification = Justification::Unconditional;
};

struct Rejection {
  std::string reason;
  /// True when the candidate might still refute f but could not be certified.
  bool inconclusive = false;
};

using WitnessResult = std::variant<RefutationReport, Rejection>;

/// Accepts iff z ∈ X(M) and f(z) < 0.
WitnessResult type1_witness(const Polynomial& f, const GeneratorSet& cone, const Point& z);

/// Requires z ∈ X(M) and f(z) = 0 (PreconditionError otherwise). Accepts iff every
/// active generator has D_v g > 0 (or is affine with D_v g >= 0) and D_v f(z) < 0.
WitnessResult first_order_witness(const Polynomial& f, const GeneratorSet& cone, const Point& z, const Vector& v);

/// Requires z interior to X(M), f(z) = 0 and ∇f(z) = 0. Accepts iff D²f(z)[v,v] < 0.
WitnessResult second_order_witness(const Polynomial& f, const GeneratorSet& cone, const Point& z, const Vector& v);

struct WitnessSearchOptions {
  /// Barycentric grid order for the type-I search on compact polytopes.
  unsigned grid_density = 5;
  std::size_t max_grid_points = 2000;
};

/// Per sample (in order): second-order at interior critical points, first-order
/// along the generators of the inward cone; then a type-I grid search when X(M)
/// is a compact polytope. The first accepted witness wins.
std::optional<RefutationReport> witness_search(const Polynomial& f, const GeneratorSet& cone,
                                               const SampleSet& samples, const WitnessSearchOptions& opts = {});

/// Quotient functional for a quadratic module with distinguished affine generator
/// g = cone.generators[generator]. Valid only under the user-asserted hypotheses
/// "I = (g) is M-convex and real radical, module generators are not zero divisors
/// mod I", which make M ∩ I ⊆ Σ squares · g + I². The result is tagged conditional.
WitnessResult quotient_witness(const Polynomial& f, const GeneratorSet& cone, std::size_t generator,
                               const Point& z0, bool hypotheses_asserted, int degree = 4);

StateType classify(const Witness& w);

/// Re-checks the witness and its negativity point from scratch.
bool verify_refutation(const Polynomial& f, const GeneratorSet& cone, const RefutationReport& report);

/// One line: `witness kind=.. z=(..) [v=(..)] value=.. class=.. justification=.. [radius=.. point=(..)]`.
std::string serialize(const RefutationReport& report);

}  // namespace posate
