#include "posate/matrix.hpp"

#include "posate/errors.hpp"

#include <utility>

namespace posate {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector product");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0 && v[c] != 0) s += (*this)(r, c) * v[c];
    }
    out[r] = s;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
    }
  return out;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Rational bilinear(const Matrix& a, const Vector& v, const Vector& w) { return dot(v, a * w); }

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(lead_row, k) != 0) m(r, k) -= factor * m(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve_linear: rhs length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

PsdResult check_psd(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) throw PreconditionError("check_psd: matrix is not symmetric");
  const std::size_t n = symmetric.rows();
  // Work on a permuted copy; perm[k] is the original index at position k.
  Matrix w = symmetric;
  Matrix lower = Matrix::identity(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  PsdResult result;

  auto swap_positions = [&](std::size_t i, std::size_t j, std::size_t done) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(w(i, k), w(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(w(k, i), w(k, j));
    for (std::size_t k = 0; k < done; ++k) std::swap(lower(i, k), lower(j, k));
    std::swap(perm[i], perm[j]);
  };

  // Vector v (original coordinates) with vᵗAv equal to uᵗ·diag(D,S)·u where u is
  // supported on the trailing block starting at `step`; solves Lᵗ v' = u.
  auto lift = [&](const Vector& u) {
    Vector vp = u;
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t k = i + 1; k < n; ++k) {
        if (lower(k, i) != 0) vp[i] -= lower(k, i) * vp[k];
      }
    }
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[perm[k]] = vp[k];
    return v;
  };

  for (std::size_t step = 0; step < n; ++step) {
    // Diagonal pivoting: prefer a negative diagonal (immediate refutation), else the first positive one.
    std::size_t choice = n;
    for (std::size_t k = step; k < n; ++k) {
      if (w(k, k) < 0) {
        choice = k;
        break;
      }
    }
    if (choice == n) {
      for (std::size_t k = step; k < n; ++k) {
        if (w(k, k) > 0) {
          choice = k;
          break;
        }
      }
    }
    if (choice == n) {
      // Remaining diagonal is zero; any nonzero off-diagonal entry makes the form indefinite.
      for (std::size_t i = step; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (w(i, j) == 0) continue;
          Vector u(n);
          u[i] = 1;
          u[j] = w(i, j) > 0 ? Rational(-1) : Rational(1);
          result.psd = false;
          result.negative_direction = lift(u);
          result.negative_value = bilinear(symmetric, result.negative_direction, result.negative_direction);
          return result;
        }
      }
      for (std::size_t k = step; k < n; ++k) result.pivots.push_back(0);
      result.psd = true;
      return result;
    }
    swap_positions(step, choice, step);
    const Rational d = w(step, step);
    result.pivots.push_back(d);
    if (d < 0) {
      Vector u(n);
      u[step] = 1;
      result.psd = false;
      result.negative_direction = lift(u);
      result.negative_value = bilinear(symmetric, result.negative_direction, result.negative_direction);
      return result;
    }
    for (std::size_t i = step + 1; i < n; ++i) {
      if (w(i, step) == 0) continue;
      const Rational l = w(i, step) / d;
      lower(i, step) = l;
      for (std::size_t j = step + 1; j < n; ++j) {
        if (w(step, j) != 0) w(i, j) -= l * w(step, j);
      }
    }
    for (std::size_t i = step + 1; i < n; ++i) {
      w(i, step) = 0;
      w(step, i) = 0;
    }
  }
  result.psd = true;
  return result;
}

}  // namespace posate
