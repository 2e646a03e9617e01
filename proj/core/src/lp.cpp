#include "posate/lp.hpp"

#include "posate/errors.hpp"

#include <optional>
#include <ostream>

namespace posate {

void LinearSystem::validate() const {
  if (b.size() != a.rows()) throw DimensionMismatch("LinearSystem: rhs length differs from row count");
  if (signs.size() != a.cols()) throw DimensionMismatch("LinearSystem: one sign constraint per column required");
}

namespace {

// Standard-form column: original variable index with orientation (+1 or -1).
struct StdColumn {
  std::size_t var;
  int orientation;
};

class Tableau {
 public:
  Tableau(const LinearSystem& sys, const SolverOptions& opts) : opts_(opts) {
    sys.validate();
    m_ = sys.num_rows();
    for (std::size_t j = 0; j < sys.num_vars(); ++j) {
      columns_.push_back({j, 1});
      if (sys.signs[j] == VarSign::Free) columns_.push_back({j, -1});
    }
    structural_ = columns_.size();
    width_ = structural_ + m_;
    row_sign_.assign(m_, 1);
    rows_.assign(m_, Vector(width_ + 1));
    for (std::size_t i = 0; i < m_; ++i) {
      row_sign_[i] = sys.b[i] < 0 ? -1 : 1;
      for (std::size_t k = 0; k < structural_; ++k) {
        const Rational& v = sys.a(i, columns_[k].var);
        if (v != 0) rows_[i][k] = v * (columns_[k].orientation * row_sign_[i]);
      }
      rows_[i][structural_ + i] = 1;
      rows_[i][width_] = sys.b[i] * row_sign_[i];
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = structural_ + i;
    num_vars_ = sys.num_vars();
  }

  // Phase I: minimise the sum of artificials. Returns the optimal value.
  Rational phase_one() {
    obj_.assign(width_ + 1, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < structural_; ++k) obj_[k] -= rows_[i][k];
      obj_[width_] -= rows_[i][width_];
    }
    log_line("phase I start");
    run([](std::size_t) { return true; });
    return -obj_[width_];
  }

  // Farkas multipliers from the phase I duals: w_i = 1 - reduced cost of artificial i.
  FarkasCertificate farkas() const {
    FarkasCertificate cert;
    cert.y.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) cert.y[i] = (1 - obj_[structural_ + i]) * row_sign_[i];
    return cert;
  }

  // Pivots basic artificials out where possible; rows that stay artificial are redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < structural_) continue;
      for (std::size_t k = 0; k < structural_; ++k) {
        if (rows_[i][k] != 0) {
          pivot(i, k);
          break;
        }
      }
    }
  }

  // Phase II with structural cost vector (per original variable). Returns the entering
  // column if unbounded.
  std::optional<std::size_t> phase_two(const Vector& cost) {
    std_cost_.assign(width_, 0);
    for (std::size_t k = 0; k < structural_; ++k) std_cost_[k] = cost[columns_[k].var] * columns_[k].orientation;
    obj_.assign(width_ + 1, 0);
    for (std::size_t k = 0; k < width_; ++k) obj_[k] = std_cost_[k];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational cb = std_cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k <= width_; ++k) {
        if (rows_[i][k] != 0) obj_[k] -= cb * rows_[i][k];
      }
    }
    log_line("phase II start");
    return run([this](std::size_t k) { return k < structural_; });
  }

  Rational objective_value() const { return -obj_[width_]; }

  Vector point() const {
    Vector std_x(width_);
    for (std::size_t i = 0; i < m_; ++i) std_x[basis_[i]] = rows_[i][width_];
    return to_original(std_x);
  }

  Vector ray(std::size_t entering) const {
    Vector d(width_);
    d[entering] = 1;
    for (std::size_t i = 0; i < m_; ++i) d[basis_[i]] = -rows_[i][entering];
    return to_original(d);
  }

 private:
  Vector to_original(const Vector& std_x) const {
    Vector x(num_vars_);
    for (std::size_t k = 0; k < structural_; ++k) {
      if (std_x[k] != 0) x[columns_[k].var] += std_x[k] * columns_[k].orientation;
    }
    return x;
  }

  template <class Allowed>
  std::optional<std::size_t> run(Allowed allowed) {
    for (;;) {
      dump();
      // Bland: smallest improving column enters.
      std::size_t entering = width_;
      for (std::size_t k = 0; k < width_; ++k) {
        if (obj_[k] < 0 && allowed(k)) {
          entering = k;
          break;
        }
      }
      if (entering == width_) return std::nullopt;
      // Ratio test; ties broken by the smallest basic index.
      std::size_t leaving = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& a = rows_[i][entering];
        if (a <= 0) continue;
        Rational ratio = rows_[i][width_] / a;
        if (leaving == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = std::move(ratio);
        }
      }
      if (leaving == m_) return entering;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    Vector& pr = rows_[r];
    const Rational inv = 1 / pr[e];
    nz_.clear();
    for (std::size_t k = 0; k <= width_; ++k) {
      if (pr[k] != 0) {
        pr[k] *= inv;
        nz_.push_back(k);
      }
    }
    auto eliminate = [&](Vector& row) {
      if (row[e] == 0) return;
      const Rational f = row[e];
      for (std::size_t k : nz_) row[k] -= f * pr[k];
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(obj_);
    basis_[r] = e;
    ++pivots_;
  }

  void log_line(const char* what) const {
    if (opts_.verbosity >= 1 && opts_.log) *opts_.log << "[lp] " << what << " rows=" << m_ << " cols=" << width_ << '\n';
  }

  void dump() const {
    if (opts_.verbosity < 2 || !opts_.log) return;
    std::ostream& os = *opts_.log;
    os << "[lp] tableau after " << pivots_ << " pivots\n";
    for (std::size_t i = 0; i < m_; ++i) {
      os << "  b" << basis_[i] << " |";
      for (std::size_t k = 0; k <= width_; ++k) os << ' ' << to_string(rows_[i][k]);
      os << '\n';
    }
    os << "  obj |";
    for (std::size_t k = 0; k <= width_; ++k) os << ' ' << to_string(obj_[k]);
    os << '\n';
  }

  SolverOptions opts_;
  std::size_t m_ = 0;
  std::size_t num_vars_ = 0;
  std::size_t structural_ = 0;
  std::size_t width_ = 0;
  std::vector<StdColumn> columns_;
  std::vector<int> row_sign_;
  std::vector<Vector> rows_;
  Vector obj_;
  Vector std_cost_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nz_;
  std::size_t pivots_ = 0;
};

}  // namespace

SolveResult solve(const LinearSystem& sys, const SolverOptions& opts) {
  Tableau t(sys, opts);
  if (t.phase_one() > 0) return Infeasible{t.farkas()};
  return Feasible{t.point()};
}

OptimizeResult minimize(const Vector& c, const LinearSystem& sys, const SolverOptions& opts) {
  if (c.size() != sys.num_vars()) throw DimensionMismatch("minimize: objective length");
  Tableau t(sys, opts);
  if (t.phase_one() > 0) return Infeasible{t.farkas()};
  t.drive_out_artificials();
  if (auto entering = t.phase_two(c)) return Unbounded{t.point(), t.ray(*entering)};
  return Optimal{t.objective_value(), t.point()};
}

OptimizeResult maximize(const Vector& c, const LinearSystem& sys, const SolverOptions& opts) {
  Vector neg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  OptimizeResult r = minimize(neg, sys, opts);
  if (auto* opt = std::get_if<Optimal>(&r)) opt->value = -opt->value;
  return r;
}

bool verify_feasible(const LinearSystem& sys, const Vector& x) {
  if (x.size() != sys.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sys.signs[j] == VarSign::Nonnegative && x[j] < 0) return false;
  }
  return sys.a * x == sys.b;
}

bool verify_farkas(const LinearSystem& sys, const FarkasCertificate& cert) {
  if (cert.y.size() != sys.num_rows()) return false;
  for (std::size_t j = 0; j < sys.num_vars(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
      if (sys.a(i, j) != 0 && cert.y[i] != 0) s += cert.y[i] * sys.a(i, j);
    }
    if (sys.signs[j] == VarSign::Free ? s != 0 : s > 0) return false;
  }
  return dot(cert.y, sys.b) > 0;
}

bool verify_improving_ray(const LinearSystem& sys, const Vector& c, const Vector& ray) {
  if (ray.size() != sys.num_vars() || c.size() != sys.num_vars()) return false;
  for (std::size_t j = 0; j < ray.size(); ++j) {
    if (sys.signs[j] == VarSign::Nonnegative && ray[j] < 0) return false;
  }
  for (const Rational& v : sys.a * ray) {
    if (v != 0) return false;
  }
  return dot(c, ray) < 0;
}

}  // namespace posate
