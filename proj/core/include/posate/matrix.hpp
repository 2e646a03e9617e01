#pragma once

#include "posate/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace posate {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;

  bool is_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// vᵗ·A·w.
Rational bilinear(const Matrix& a, const Vector& v, const Vector& w);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : A v = 0}: one vector per free column, with a 1 there.
std::vector<Vector> nullspace(const Matrix& a);

/// Some solution of A x = b (free variables set to zero), if consistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Exact positive-semidefiniteness test by symmetric LDLᵗ with diagonal pivoting.
struct PsdResult {
  bool psd = false;
  /// When not PSD: a vector with vᵗ A v < 0.
  Vector negative_direction;
  Rational negative_value;
  /// Pivots of the decomposition (in pivot order); all >= 0 when PSD.
  std::vector<Rational> pivots;
};

PsdResult check_psd(const Matrix& symmetric);

}  // namespace posate
