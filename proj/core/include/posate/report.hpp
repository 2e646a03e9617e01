#pragma once

#include "posate/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace posate {

enum class Verdict { Verified, Violated, Inconclusive };

/// `verified-on-samples`, `violated`, `inconclusive`.
std::string_view to_string(Verdict v);

/// Exactly re-checkable payload of a violated condition.
struct Counterexample {
  Vector z;
  std::optional<Vector> direction;
  /// The offending quantity, e.g. D_v f(z), b_i(z) or H[v,v].
  Rational value;
  std::string quantity;
};

struct ConditionReport {
  std::string condition;
  std::optional<std::size_t> sample;  // 1-based sample index when per-sample
  Verdict verdict = Verdict::Verified;
  std::string detail;
  std::optional<Counterexample> counterexample;
};

/// Structured verdict of a theorem-hypothesis check.
struct CheckReport {
  std::string theorem;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<ConditionReport> conditions;
  std::vector<std::string> notes;

  void add(ConditionReport c) { conditions.push_back(std::move(c)); }
  /// Violated if any condition is violated, else inconclusive if any is, else verified.
  void finalize();
  /// First counterexample in condition order.
  const Counterexample* counterexample() const;
};

/// Line-oriented `key=value` text, one line per condition.
std::string serialize(const CheckReport& report);

std::string serialize(const Counterexample& c);

}  // namespace posate
