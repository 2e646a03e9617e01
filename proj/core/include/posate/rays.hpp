#pragma once

#include "posate/matrix.hpp"

#include <vector>

namespace posate {

/// Generators of the polyhedral cone {v : G v >= 0}.
///
/// The cone equals cone(rays) + span(lineality). Rays are irredundant and
/// scaled so their first nonzero coordinate is +1 or -1; lineality vectors
/// form the reduced row echelon basis of ker G.
struct RayDecomposition {
  std::vector<Vector> rays;
  std::vector<Vector> lineality;
};

/// Largest ambient dimension accepted by extreme_rays.
inline constexpr std::size_t kMaxRayDimension = 10;

/// Double-description construction. Throws CapExceeded above kMaxRayDimension.
RayDecomposition extreme_rays(const Matrix& g);

/// Checks G r >= 0 for rays and G w = 0 for lineality vectors.
bool satisfies_cone(const Matrix& g, const RayDecomposition& dec);

/// Scales v so its first nonzero coordinate has absolute value 1 (direction preserved).
Vector normalize_direction(Vector v);

}  // namespace posate
