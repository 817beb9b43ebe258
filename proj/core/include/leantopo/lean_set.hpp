#ifndef LEANTOPO_LEAN_SET_HPP
#define LEANTOPO_LEAN_SET_HPP

#include <optional>
#include <vector>

#include "leantopo/point_cloud.hpp"
#include "leantopo/spatial_index.hpp"
#include "leantopo/tangent_estimation.hpp"

namespace leantopo {

/// Midpoint of one admissible pair, with provenance.
struct LeanPoint {
    std::vector<double> midpoint;
    std::size_t pair_first;   // smaller id
    std::size_t pair_second;  // larger id
    double pair_distance;
};

/**
 * Midpoints of all admissible pairs of the input: pairs whose chord is
 * nearly parallel to both estimated normal spaces and whose midpoint ball
 * of radius c_beta * d(p,q) is empty of samples. A small stand-in for part
 * of the medial axis.
 */
struct LeanSet {
    double beta = 0.0;
    double c_beta = 0.0;
    bool c_beta_overridden = false;
    bool reduced = false;
    std::vector<LeanPoint> points;  // lexicographic by (pair_first, pair_second)

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }

    // Midpoints as a cloud (intrinsic dim inherited), for distance queries.
    PointCloud as_cloud(int ambient_dim, int intrinsic_dim) const;
};

// c_beta(beta) = tan(beta/2) / 3, for beta in (0, pi/2).
double c_beta(double beta);

bool is_beta_good(const PointCloud& cloud,
                  const std::vector<TangentEstimate>& normals,
                  const SpatialIndex& index, std::size_t p, std::size_t q,
                  double beta,
                  std::optional<double> c_beta_override = std::nullopt);

LeanSet build_lean_set(const PointCloud& cloud,
                       const std::vector<TangentEstimate>& normals,
                       const SpatialIndex& index, double beta,
                       std::optional<double> c_beta_override = std::nullopt);

// Keeps, for each participating point p, only the midpoint of its closest
// admissible pair. Output size <= n and is a subset of the input set.
LeanSet reduce_lean_set(const LeanSet& lean, const PointCloud& cloud);

// Drops every lean point whose generating pair is closer than the given
// threshold; used to suppress pairs fabricated by sampling noise.
LeanSet noise_filter(const LeanSet& lean, double min_pair_distance);

/// Nearest-lean-midpoint distance evaluator (a second index over midpoints).
class LeanFeatureSize {
  public:
    LeanFeatureSize(const LeanSet& lean, int ambient_dim, int intrinsic_dim);

    double operator()(std::span<const double> x) const;

    const PointCloud& midpoints() const { return midpoint_cloud_; }

  private:
    PointCloud midpoint_cloud_;
    SpatialIndex midpoint_index_;
};

}  // namespace leantopo

#endif
