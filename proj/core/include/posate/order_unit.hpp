#pragma once

#include "posate/certify.hpp"
#include "posate/ideal.hpp"

#include <optional>
#include <vector>

namespace posate {

/// Degree-truncated evidence that n·u + sign·a has no certificate.
struct ProbeRefutation {
  unsigned n = 0;
  int sign = 1;
  SeparatingFunctional functional;
};

struct TargetProbe {
  Polynomial target;
  /// Smallest n <= n_max with both n·u ± a certified, if any.
  std::optional<unsigned> bound;
  std::optional<Certificate> plus;   // certificate of n·u + a
  std::optional<Certificate> minus;  // certificate of n·u - a
  /// One entry for every n that failed, for the side that failed.
  std::vector<ProbeRefutation> refutations;
};

/// Outcome of probing whether u bounds the targets in the truncated cone.
/// A missing bound at (degree, n_max) is inconclusive.
struct ProbeResult {
  int degree = 0;
  unsigned n_max = 0;
  std::vector<TargetProbe> targets;

  bool all_bounded() const;
};

/// Probes a ∈ O(M, u) for each target a: the smallest n with n·u ± a in the
/// degree-`degree` truncation of the cone. u and every target must lie in the
/// ideal (checked by ideal_membership with cofactors of degree <= `degree`).
ProbeResult order_unit_probe(const IdealBasis& ideal, const GeneratorSet& cone, const Polynomial& u,
                             const std::vector<Polynomial>& targets, int degree, unsigned n_max,
                             std::size_t basis_cap = kDefaultBasisCap);

}  // namespace posate
