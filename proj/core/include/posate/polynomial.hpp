#pragma once

#include "posate/rational.hpp"

#include <climits>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace posate {

class Matrix;

/// Exponent vector x^α of fixed ambient dimension.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dim) : exponents_(dim, 0) {}
  explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t dim, std::size_t index, unsigned power = 1);

  std::size_t dim() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept;
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }
  bool is_constant() const noexcept { return degree() == 0; }

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exponents_;
};

/// Graded lexicographic order: total degree first, then x1 before x2 before ...
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials in `dim` variables with total degree <= `max_degree`, ascending grlex.
std::vector<Monomial> monomials_up_to(std::size_t dim, unsigned max_degree);

using Point = Vector;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal. Terms are kept in ascending grlex order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  /// Degree reported for the zero polynomial (stands in for -infinity).
  static constexpr int kZeroDegree = INT_MIN;

  Polynomial() = default;
  explicit Polynomial(std::size_t dim) : dim_(dim) {}

  static Polynomial constant(std::size_t dim, const Rational& c);
  static Polynomial variable(std::size_t dim, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t dim() const noexcept { return dim_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Degree <= 1.
  bool is_affine() const noexcept { return degree() <= 1; }
  int degree() const noexcept;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Adds c·m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_dim(const Polynomial& other) const;

  std::size_t dim_ = 0;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

Rational evaluate(const Polynomial& p, const Point& z);

Polynomial partial_derivative(const Polynomial& p, std::size_t index);

Vector gradient(const Polynomial& p, const Point& z);
Matrix hessian(const Polynomial& p, const Point& z);

/// D_v p(z) = ∇p(z)·v.
Rational directional_derivative(const Polynomial& p, const Point& z, const Vector& v);

/// vᵗ·∇²p(z)·v.
Rational hessian_form(const Polynomial& p, const Point& z, const Vector& v);

/// Substitutes x_i -> images[i]; images must share one ambient dimension.
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images);

/// The univariate polynomial t ↦ p(z + t·v).
Polynomial restrict_to_line(const Polynomial& p, const Point& z, const Vector& v);

/// Affine polynomial c + a·x.
Polynomial affine(const Vector& linear, const Rational& constant);

/// Linear part a of an affine polynomial a·x + c.
Vector linear_part(const Polynomial& p);

// ---------------------------------------------------------------------------
// Text format
//
// Canonical output lists terms in descending grlex order as
// `c x1^e1 x2^e2 ...` joined by ` + ` / ` - `; unit coefficients are omitted
// on non-constant terms and the zero polynomial prints as `0`. The parser
// accepts that form plus `*`, `/ <rational>`, `^`, parentheses and implicit
// multiplication, ignoring whitespace.

/// `x1, ..., x<dim>`.
std::vector<std::string> default_variable_names(std::size_t dim);

std::string format(const Polynomial& p, const std::vector<std::string>& names = {});

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);
Polynomial parse_polynomial(std::string_view text, std::size_t dim);

void require_dim(const Polynomial& p, std::size_t dim, const char* what);
void require_dim(const Vector& v, std::size_t dim, const char* what);

}  // namespace posate
