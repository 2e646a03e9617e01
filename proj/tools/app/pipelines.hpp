#pragma once

#include "problem.hpp"

#include <functional>
#include <optional>
#include <string>

namespace posate::app {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitInternal = 4;

struct RunOutcome {
  int exit_code = kExitInconclusive;
  /// Line-oriented report printed to stdout.
  std::string output;
  /// Serialized certificate when the outcome is certified.
  std::optional<std::string> certificate;
};

/// Command-line overrides; unset fields fall back to the problem file, then defaults.
struct RunSettings {
  std::optional<int> max_degree;
  std::optional<std::size_t> basis_cap;
  std::optional<unsigned> grid_density;
};

/// Environment variable consulted for the basis cap when neither flag nor file sets it.
inline constexpr const char* kBasisCapEnv = "POSATE_BASIS_CAP";

std::size_t effective_basis_cap(const Problem& p, const RunSettings& s);

/// Handelman search; on failure falls through to the refutation search.
RunOutcome run_certify(const Problem& p, const RunSettings& s = {});

/// theorem: sumbiti | boundary | polytope-face | interior.
RunOutcome run_check(const Problem& p, const std::string& theorem, const RunSettings& s = {});

/// Quotient witness when quotient options are present, otherwise witness_search.
RunOutcome run_refute(const Problem& p, const RunSettings& s = {});

RunOutcome run_verify(const Problem& p, const std::string& certificate_text);

RunOutcome run_taylor(unsigned n);

/// Runs `body`, mapping library exceptions onto the exit-code contract.
RunOutcome guarded(const std::function<RunOutcome()>& body);

}  // namespace posate::app
