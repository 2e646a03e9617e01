#include "posate/report.hpp"

#include <sstream>

namespace posate {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified-on-samples";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void CheckReport::finalize() {
  bool violated = false, inconclusive = conditions.empty();
  for (const auto& c : conditions) {
    violated = violated || c.verdict == Verdict::Violated;
    inconclusive = inconclusive || c.verdict == Verdict::Inconclusive;
  }
  verdict = violated ? Verdict::Violated : (inconclusive ? Verdict::Inconclusive : Verdict::Verified);
}

const Counterexample* CheckReport::counterexample() const {
  for (const auto& c : conditions) {
    if (c.verdict == Verdict::Violated && c.counterexample) return &*c.counterexample;
  }
  return nullptr;
}

namespace {

// Keeps detail text on one line so the report stays line-oriented.
std::string one_line(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::string serialize(const Counterexample& c) {
  std::string out = "z=" + to_string(c.z);
  if (c.direction) out += " v=" + to_string(*c.direction);
  out += " quantity=" + one_line(c.quantity) + " value=" + to_string(c.value);
  return out;
}

std::string serialize(const CheckReport& report) {
  std::ostringstream out;
  out << "report theorem=" << report.theorem << '\n';
  for (const auto& c : report.conditions) {
    out << "condition name=" << c.condition;
    if (c.sample) out << " sample=" << *c.sample;
    out << " verdict=" << to_string(c.verdict);
    if (!c.detail.empty()) out << " detail=" << one_line(c.detail);
    out << '\n';
    if (c.counterexample) out << "  counterexample " << serialize(*c.counterexample) << '\n';
  }
  for (const auto& n : report.notes) out << "note " << one_line(n) << '\n';
  out << "verdict=" << to_string(report.verdict) << '\n';
  if (const Counterexample* ce = report.counterexample()) out << "counterexample " << serialize(*ce) << '\n';
  return out.str();
}

}  // namespace posate
