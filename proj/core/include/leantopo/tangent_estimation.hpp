#ifndef LEANTOPO_TANGENT_ESTIMATION_HPP
#define LEANTOPO_TANGENT_ESTIMATION_HPP

#include <vector>

#include "leantopo/point_cloud.hpp"
#include "leantopo/spatial_index.hpp"
#include "leantopo/subspace.hpp"

namespace leantopo {

/// Per-point tangent/normal estimate from the greedy fat-simplex build.
struct TangentEstimate {
    std::size_t point_id;
    SubspaceBasis tangent_basis;   // dimension s
    SubspaceBasis normal_basis;    // dimension k - s (empty when s == k)
    std::vector<std::size_t> witness_ids;  // the s+1 vertices of sigma_s
};

// Angle window half-width for accepting the next simplex vertex; the
// construction accepts candidates whose displacement makes an angle in
// [pi/2 - kTangentAngleWindow, pi/2] with the current affine hull.
inline constexpr double kTangentAngleWindow = M_PI / 5.0;

/**
 * Builds sigma_s greedily: start from p and its nearest neighbor, then
 * repeatedly add the point closest to p whose displacement is within the
 * angle window of being perpendicular to aff(sigma_i). The span of the
 * edge vectors approximates the tangent space at p.
 */
TangentEstimate estimate_tangent_basis(const PointCloud& cloud,
                                       const SpatialIndex& index,
                                       std::size_t p);

// Applies estimate_tangent_basis to every point; output ordered by id.
std::vector<TangentEstimate> estimate_all_normals(const PointCloud& cloud,
                                                  const SpatialIndex& index);

/**
 * Wraps externally supplied normal bases (e.g. analytic ones, or normals
 * carried by a scanned mesh) in TangentEstimate records. Each row holds the
 * (k - s) spanning vectors of the normal space at the matching point,
 * vector by vector, k coordinates each. Vectors are orthonormalized; the
 * tangent basis is completed as the orthogonal complement.
 */
std::vector<TangentEstimate> normals_from_rows(
    const PointCloud& cloud, const std::vector<std::vector<double>>& rows);

}  // namespace leantopo

#endif
