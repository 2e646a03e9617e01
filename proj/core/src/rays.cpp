#include "posate/rays.hpp"

#include "posate/errors.hpp"

#include <algorithm>

namespace posate {

Vector normalize_direction(Vector v) {
  for (const Rational& x : v) {
    if (x != 0) {
      const Rational scale = 1 / abs(x);
      for (Rational& y : v) y *= scale;
      break;
    }
  }
  return v;
}

namespace {

// Rank of the rows of `a` listed in `idx`.
std::size_t subset_rank(const Matrix& a, const std::vector<std::size_t>& idx) {
  Matrix sub(idx.size(), a.cols());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) sub(r, c) = a(idx[r], c);
  return rank(sub);
}

struct DdRay {
  Vector w;
  std::vector<bool> tight;  // tight[i]: processed row i vanishes on w
};

// Double description for a pointed cone {w : A w >= 0} with rank(A) = A.cols().
std::vector<Vector> pointed_rays(const Matrix& a) {
  const std::size_t dim = a.cols();
  const std::size_t m = a.rows();

  // Initial simplicial cone from the first `dim` independent rows.
  std::vector<std::size_t> basis_rows;
  for (std::size_t i = 0; i < m && basis_rows.size() < dim; ++i) {
    basis_rows.push_back(i);
    if (subset_rank(a, basis_rows) < basis_rows.size()) basis_rows.pop_back();
  }
  Matrix square(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) square(r, c) = a(basis_rows[r], c);

  // Columns of the inverse are the initial rays.
  std::vector<DdRay> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    Vector e(dim);
    e[k] = 1;
    auto col = solve_linear(square, e);
    rays.push_back({*col, std::vector<bool>(m, false)});
  }
  std::vector<bool> processed(m, false);
  for (std::size_t i : basis_rows) processed[i] = true;
  for (auto& r : rays) {
    for (std::size_t i : basis_rows) r.tight[i] = dot(a.row(i), r.w) == 0;
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    const Vector row = a.row(i);
    std::vector<Rational> val(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k) val[k] = dot(row, rays[k].w);

    std::vector<DdRay> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] >= 0) {
        DdRay r = rays[k];
        r.tight[i] = val[k] == 0;
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        // Adjacency: common tight constraints among processed rows span rank dim-2.
        std::vector<std::size_t> common;
        for (std::size_t j = 0; j < m; ++j) {
          if (processed[j] && rays[p].tight[j] && rays[q].tight[j]) common.push_back(j);
        }
        if (dim >= 2 && (common.size() < dim - 2 || subset_rank(a, common) != dim - 2)) continue;
        if (dim < 2) continue;
        DdRay combo;
        combo.w.resize(dim);
        for (std::size_t c = 0; c < dim; ++c) combo.w[c] = val[p] * rays[q].w[c] - val[q] * rays[p].w[c];
        combo.tight.assign(m, false);
        for (std::size_t j = 0; j < m; ++j) {
          if (processed[j]) combo.tight[j] = dot(a.row(j), combo.w) == 0;
        }
        combo.tight[i] = true;
        next.push_back(std::move(combo));
      }
    }
    processed[i] = true;
    rays = std::move(next);
  }

  // Final extremality filter (rank of tight rows = dim - 1) and deduplication.
  std::vector<Vector> out;
  for (const auto& r : rays) {
    std::vector<std::size_t> tight;
    for (std::size_t j = 0; j < m; ++j) {
      if (dot(a.row(j), r.w) == 0) tight.push_back(j);
    }
    if (dim >= 1 && subset_rank(a, tight) != dim - 1) continue;
    Vector n = normalize_direction(r.w);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  return out;
}

}  // namespace

RayDecomposition extreme_rays(const Matrix& g) {
  const std::size_t n = g.cols();
  if (n > kMaxRayDimension) {
    throw CapExceeded("extreme_rays: dimension " + std::to_string(n) + " exceeds limit " +
                      std::to_string(kMaxRayDimension));
  }
  RayDecomposition dec;

  // Lineality space ker G, canonicalised by row reduction.
  const std::vector<Vector> kernel = nullspace(g);
  if (!kernel.empty()) {
    const RowEchelon e = rref(Matrix::from_rows(kernel, n));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) dec.lineality.push_back(e.reduced.row(r));
  }

  // Pointed part lives in the row space of G: v = Bᵗ w.
  const RowEchelon rs = rref(g);
  const std::size_t r = rs.pivots.size();
  if (r == 0) return dec;
  Matrix basis(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) basis(i, c) = rs.reduced(i, c);
  const Matrix reduced_g = g * basis.transpose();

  for (const Vector& w : pointed_rays(reduced_g)) {
    Vector v(n);
    for (std::size_t i = 0; i < r; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] += w[i] * basis(i, c);
    }
    dec.rays.push_back(normalize_direction(std::move(v)));
  }
  std::sort(dec.rays.begin(), dec.rays.end(), [](const Vector& x, const Vector& y) { return x > y; });
  return dec;
}

bool satisfies_cone(const Matrix& g, const RayDecomposition& dec) {
  for (const auto& r : dec.rays) {
    bool nonzero = false;
    for (const auto& x : r) nonzero = nonzero || x != 0;
    if (!nonzero) return false;
    for (const auto& v : g * r) {
      if (v < 0) return false;
    }
  }
  for (const auto& w : dec.lineality) {
    for (const auto& v : g * w) {
      if (v != 0) return false;
    }
  }
  return true;
}

}  // namespace posate
