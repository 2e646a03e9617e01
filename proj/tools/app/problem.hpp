#pragma once

#include "posate/checkers.hpp"
#include "posate/cone.hpp"
#include "posate/ideal.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace posate::app {

/// A required section or option is missing for the selected command.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct ProblemOptions {
  int max_degree = 8;
  std::optional<int> start_degree;
  std::optional<std::size_t> basis_cap;
  unsigned grid_density = 5;
  /// Cofactor degree for ideal membership checks.
  int degree = 4;
  std::optional<Rational> epsilon;
  bool quotient_hypotheses = false;
  bool lci = false;
  std::optional<std::size_t> quotient_generator;  // 0-based
  std::optional<Point> quotient_point;
  std::optional<std::string> theorem;
};

/// One problem per file. Generator indices are stored 0-based.
struct Problem {
  std::string source = "<input>";
  std::vector<std::string> names;
  GeneratorSet cone;
  std::optional<Polynomial> target;
  std::vector<std::size_t> ideal;
  std::set<std::size_t> face;
  std::optional<IdealBasis> variety;
  std::optional<std::size_t> variety_dim;
  std::vector<Point> samples;
  std::vector<SumbitiTerm> decomposition;
  ProblemOptions options;

  std::size_t dim() const { return names.size(); }
  const Polynomial& require_target() const;
};

/// Parses the sectioned problem format; errors are ParseErrors carrying line numbers.
Problem parse_problem(std::string_view text, std::string source = "<input>");

Problem load_problem(const std::string& path);

/// Canonical text of a parsed problem; parse_problem(write_problem(p)) reproduces p.
std::string write_problem(const Problem& p);

}  // namespace posate::app
