#pragma once

#include "posate/matrix.hpp"
#include "posate/rational.hpp"

#include <iosfwd>
#include <variant>
#include <vector>

namespace posate {

enum class VarSign { Free, Nonnegative };

/// Equality-form linear system  A x = b  with a sign constraint per variable.
struct LinearSystem {
  Matrix a;
  Vector b;
  std::vector<VarSign> signs;

  std::size_t num_rows() const noexcept { return a.rows(); }
  std::size_t num_vars() const noexcept { return a.cols(); }
  void validate() const;
};

/// Multiplier vector y refuting feasibility: yᵗA <= 0 on nonnegative columns,
/// yᵗA = 0 on free columns, and yᵗb > 0.
struct FarkasCertificate {
  Vector y;
};

struct Feasible {
  Vector x;
};

struct Infeasible {
  FarkasCertificate certificate;
};

struct Optimal {
  Rational value;
  Vector x;
};

/// Feasible point plus a direction along which the objective decreases without bound.
struct Unbounded {
  Vector x;
  Vector ray;
};

using SolveResult = std::variant<Feasible, Infeasible>;
using OptimizeResult = std::variant<Optimal, Unbounded, Infeasible>;

struct SolverOptions {
  /// 0 silent, 1 phase summaries, 2 full tableau dumps.
  int verbosity = 0;
  std::ostream* log = nullptr;
};

/// Exact feasibility via phase I of the simplex method (Bland's rule).
SolveResult solve(const LinearSystem& sys, const SolverOptions& opts = {});

/// Exact minimisation of cᵗx over the system.
OptimizeResult minimize(const Vector& c, const LinearSystem& sys, const SolverOptions& opts = {});

/// Exact maximisation; Optimal::value is the maximum and Unbounded::ray increases cᵗx.
OptimizeResult maximize(const Vector& c, const LinearSystem& sys, const SolverOptions& opts = {});

bool verify_feasible(const LinearSystem& sys, const Vector& x);
bool verify_farkas(const LinearSystem& sys, const FarkasCertificate& cert);
/// Ray keeps A·r = 0 and sign feasibility, and strictly decreases cᵗx.
bool verify_improving_ray(const LinearSystem& sys, const Vector& c, const Vector& ray);

}  // namespace posate
