#include "posate/order_unit.hpp"

#include "posate/errors.hpp"

namespace posate {

bool ProbeResult::all_bounded() const {
  for (const auto& t : targets) {
    if (!t.bound) return false;
  }
  return true;
}

namespace {

void require_in_ideal(const Polynomial& p, const IdealBasis& ideal, int degree, const char* what) {
  if (std::holds_alternative<MembershipNotFound>(ideal_membership(p, ideal, degree))) {
    throw PreconditionError(std::string(what) + " " + format(p) + " is not certified in the ideal at degree " +
                            std::to_string(degree));
  }
}

}  // namespace

ProbeResult order_unit_probe(const IdealBasis& ideal, const GeneratorSet& cone, const Polynomial& u,
                             const std::vector<Polynomial>& targets, int degree, unsigned n_max,
                             std::size_t basis_cap) {
  cone.validate();
  ideal.validate();
  require_in_ideal(u, ideal, degree, "order-unit candidate");
  for (const auto& a : targets) require_in_ideal(a, ideal, degree, "probe target");

  ProbeResult result;
  result.degree = degree;
  result.n_max = n_max;
  for (const auto& a : targets) {
    TargetProbe probe;
    probe.target = a;
    // A functional refuting one value of n often refutes the next; reuse it before re-solving.
    std::optional<SeparatingFunctional> last[2];
    for (unsigned n = 1; n <= n_max && !probe.bound; ++n) {
      std::optional<Certificate> found[2];
      bool failed = false;
      for (int side = 0; side < 2 && !failed; ++side) {
        const int sign = side == 0 ? 1 : -1;
        const Polynomial candidate = u * Rational(n) + a * Rational(sign);
        if (last[side] && last[side]->apply(candidate) < 0) {
          probe.refutations.push_back({n, sign, *last[side]});
          failed = true;
          break;
        }
        DegreeResult r = certify_at_degree(candidate, cone, degree, basis_cap);
        if (auto* cert = std::get_if<Certificate>(&r)) {
          found[side] = std::move(*cert);
        } else {
          last[side] = std::get<SeparatingFunctional>(std::move(r));
          probe.refutations.push_back({n, sign, *last[side]});
          failed = true;
        }
      }
      if (!failed) {
        probe.bound = n;
        probe.plus = std::move(found[0]);
        probe.minus = std::move(found[1]);
      }
    }
    result.targets.push_back(std::move(probe));
  }
  return result;
}

}  // namespace posate
