#include "pipelines.hpp"

#include "posate/certify.hpp"
#include "posate/errors.hpp"
#include "posate/polytope.hpp"
#include "posate/taylor.hpp"
#include "posate/witness.hpp"

#include <cstdlib>
#include <sstream>

namespace posate::app {

namespace {

std::string one_line(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

RunOutcome inconclusive(const std::string& reason, std::string prefix = {}) {
  return {kExitInconclusive, prefix + "outcome=inconclusive reason=" + one_line(reason) + "\n", std::nullopt};
}

int max_degree(const Problem& p, const RunSettings& s) { return s.max_degree.value_or(p.options.max_degree); }

unsigned grid_density(const Problem& p, const RunSettings& s) {
  return s.grid_density.value_or(p.options.grid_density);
}

// Samples that are zeros of f inside X(M); the rest cannot anchor derivative states.
SampleSet zero_samples(const Polynomial& f, const GeneratorSet& cone, const std::vector<Point>& points) {
  std::vector<Sample> samples;
  for (const auto& z : points) {
    if (cone.contains_point(z) && evaluate(f, z) == 0) samples.push_back({z, SampleOrigin::User});
  }
  return SampleSet::create(f, cone, std::move(samples));
}

std::optional<RefutationReport> refutation(const Problem& p, const RunSettings& s) {
  const Polynomial& f = p.require_target();
  for (const auto& z : p.samples) {
    const WitnessResult r = type1_witness(f, p.cone, z);
    if (const auto* ok = std::get_if<RefutationReport>(&r)) return *ok;
  }
  WitnessSearchOptions wo;
  wo.grid_density = grid_density(p, s);
  if (auto r = witness_search(f, p.cone, zero_samples(f, p.cone, p.samples), wo)) return r;
  if (p.options.quotient_generator && p.options.quotient_point) {
    const WitnessResult r = quotient_witness(f, p.cone, *p.options.quotient_generator, *p.options.quotient_point,
                                             p.options.quotient_hypotheses, p.options.degree);
    if (const auto* ok = std::get_if<RefutationReport>(&r)) return *ok;
  }
  return std::nullopt;
}

RunOutcome refuted(const Problem& p, const RefutationReport& r, std::string prefix) {
  if (!verify_refutation(p.require_target(), p.cone, r)) {
    throw std::logic_error("refutation witness failed re-verification");
  }
  return {kExitNegative, prefix + "outcome=refuted\n" + serialize(r) + "\n", std::nullopt};
}

SampleSet user_samples(const Problem& p) {
  std::vector<Sample> v;
  for (const auto& z : p.samples) v.push_back({z, SampleOrigin::User});
  return SampleSet::create(p.require_target(), p.cone, std::move(v));
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Verified: return kExitPositive;
    case Verdict::Violated: return kExitNegative;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

const IdealBasis& require_variety(const Problem& p, const std::string& theorem) {
  if (!p.variety) throw UsageError("--theorem " + theorem + " needs a [variety] section");
  return *p.variety;
}

}  // namespace

std::size_t effective_basis_cap(const Problem& p, const RunSettings& s) {
  if (s.basis_cap) return *s.basis_cap;
  if (p.options.basis_cap) return *p.options.basis_cap;
  if (const char* env = std::getenv(kBasisCapEnv)) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kBasisCapEnv) + " must be a nonnegative integer");
  }
  return kDefaultBasisCap;
}

RunOutcome run_certify(const Problem& p, const RunSettings& s) {
  const Polynomial& f = p.require_target();
  p.cone.validate();
  CertifyOptions co;
  co.max_degree = max_degree(p, s);
  co.start_degree = p.options.start_degree;
  co.basis_cap = effective_basis_cap(p, s);
  const CertifyResult result = handelman_certify(f, p.cone, co);
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    if (!verify_certificate(f, *cert, p.cone)) throw std::logic_error("certificate failed re-verification");
    const std::string text = serialize(*cert, p.names);
    return {kExitPositive, "outcome=certified degree=" + std::to_string(cert->degree) + "\n" + text, text};
  }
  const std::string prefix = "search=not-found max-degree=" + std::to_string(co.max_degree) + "\n";
  if (auto r = refutation(p, s)) return refuted(p, *r, prefix);
  return inconclusive("no certificate up to degree " + std::to_string(co.max_degree) + " and no witness found", prefix);
}

RunOutcome run_check(const Problem& p, const std::string& theorem_flag, const RunSettings& s) {
  const std::string theorem = theorem_flag.empty() ? p.options.theorem.value_or("") : theorem_flag;
  if (theorem.empty()) throw UsageError("no theorem selected; pass --theorem or set 'theorem' in [options]");
  const Polynomial& f = p.require_target();
  p.cone.validate();
  CheckReport report;
  std::string extra;
  if (theorem == "sumbiti") {
    if (p.decomposition.empty()) throw UsageError("--theorem sumbiti needs a [decomposition] section");
    SumbitiOptions so;
    so.epsilon = p.options.epsilon;
    so.degree = max_degree(p, s);
    so.basis_cap = effective_basis_cap(p, s);
    report = check_sumbiti(f, p.decomposition, p.cone, user_samples(p), so);
  } else if (theorem == "boundary") {
    if (p.ideal.empty()) throw UsageError("--theorem boundary needs an [ideal] section");
    const IdealBasis& variety = require_variety(p, theorem);
    report = check_boundary_theorem(f, p.cone, p.ideal, variety, *p.variety_dim, user_samples(p), p.options.degree);
  } else if (theorem == "polytope-face") {
    if (p.face.empty()) throw UsageError("--theorem polytope-face needs a [face] section");
    PolytopeFaceOptions po;
    po.degree = p.options.degree;
    po.grid_density = grid_density(p, s);
    report = check_polytope_face(f, p.cone.generators, p.face, p.samples, po);
    if (report.verdict == Verdict::Verified) {
      // The face criterion predicts a Handelman certificate; try to produce it.
      const GeneratorSet semiring = semiring_of(p.cone.generators);
      CertifyOptions co;
      co.max_degree = max_degree(p, s);
      co.basis_cap = effective_basis_cap(p, s);
      const CertifyResult r = handelman_certify(f, semiring, co);
      if (const auto* cert = std::get_if<Certificate>(&r)) {
        const bool ok = verify_certificate(f, *cert, semiring);
        extra = "handelman degree=" + std::to_string(cert->degree) + " verified=" + (ok ? "yes" : "no") + "\n";
      } else {
        extra = "handelman not-found max-degree=" + std::to_string(co.max_degree) + "\n";
      }
    }
  } else if (theorem == "interior") {
    const IdealBasis& variety = require_variety(p, theorem);
    report = check_interior_theorem(f, p.cone, variety, *p.variety_dim, user_samples(p), p.options.degree,
                                    p.options.lci);
  } else {
    throw UsageError("unknown theorem '" + theorem + "'");
  }
  return {exit_for(report.verdict), serialize(report) + extra, std::nullopt};
}

RunOutcome run_refute(const Problem& p, const RunSettings& s) {
  p.require_target();
  p.cone.validate();
  if (auto r = refutation(p, s)) return refuted(p, *r, {});
  return inconclusive("none-found");
}

RunOutcome run_verify(const Problem& p, const std::string& certificate_text) {
  const Polynomial& f = p.require_target();
  p.cone.validate();
  const Certificate cert = parse_certificate(certificate_text, p.dim(), p.names);
  if (verify_certificate(f, cert, p.cone)) return {kExitPositive, "outcome=verified\n", std::nullopt};
  const Polynomial residual = f - expand(cert, p.cone);
  return {kExitNegative, "outcome=rejected residual=" + one_line(format(residual, p.names)) + "\n", std::nullopt};
}

RunOutcome run_taylor(unsigned n) {
  const Polynomial t = taylor_sqrt(n);
  const Polynomial defect = sqrt_defect(n);
  const SqrtDefectCheck check = inspect_sqrt_defect(n, defect);
  const std::vector<std::string> names = {"x"};
  std::ostringstream out;
  out << "t_" << n << " = " << format(t, names) << '\n';
  out << "p_" << n << " = " << format(defect, names) << '\n';
  out << "nonnegative=" << (check.nonnegative ? "yes" : "no") << " dyadic=" << (check.dyadic ? "yes" : "no")
      << " support=" << (check.support_ok ? "yes" : "no") << '\n';
  return {check.nonnegative ? kExitPositive : kExitNegative, out.str(), std::nullopt};
}

RunOutcome guarded(const std::function<RunOutcome()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    return inconclusive(std::string("cap exceeded: ") + e.what());
  } catch (const UsageError& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const ParseError& e) {
    return {kExitUsage, std::string("parse error: ") + e.what() + "\n", std::nullopt};
  } catch (const PreconditionError& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const DimensionMismatch& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const std::exception& e) {
    return {kExitInternal, std::string("internal error: ") + e.what() + "\n", std::nullopt};
  }
}

}  // namespace posate::app
