#ifndef LEANTOPO_POINT_CLOUD_HPP
#define LEANTOPO_POINT_CLOUD_HPP

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "leantopo/errors.hpp"

namespace leantopo {

/**
 * Point set in R^k with a declared intrinsic dimension.
 *
 * Coordinates are stored row-major in one flat buffer. Exact coordinate
 * duplicates are dropped at ingestion (counted in duplicates_removed) so
 * that empty-ball predicates stay total.
 */
class PointCloud {
  public:
    PointCloud(int ambient_dim, int intrinsic_dim);

    // Appends a point; returns false if it duplicated an existing point.
    bool add_point(std::span<const double> coords);
    void add_points(const std::vector<std::vector<double>>& pts);

    int ambient_dim() const { return ambient_dim_; }
    int intrinsic_dim() const { return intrinsic_dim_; }
    std::size_t size() const { return coords_.size() / ambient_dim_; }
    bool empty() const { return coords_.empty(); }
    std::size_t duplicates_removed() const { return duplicates_removed_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * ambient_dim_,
                static_cast<std::size_t>(ambient_dim_)};
    }
    Eigen::Map<const Eigen::VectorXd> point_vec(std::size_t i) const {
        return {coords_.data() + i * ambient_dim_, ambient_dim_};
    }
    const std::vector<double>& raw() const { return coords_; }

    double distance(std::size_t i, std::size_t j) const;
    double distance_to(std::size_t i, std::span<const double> x) const;

    // Largest pairwise coordinate bounding-box diagonal; cheap stand-in for
    // the diameter used by the noise model.
    double bbox_diameter() const;

    // Returns a copy with every coordinate scaled by lambda.
    PointCloud scaled(double lambda) const;

  private:
    int ambient_dim_;
    int intrinsic_dim_;
    std::vector<double> coords_;
    std::size_t duplicates_removed_ = 0;
    // Bit-exact dedup bucketed by coordinate hash.
    std::unordered_map<std::size_t, std::vector<std::size_t>> dedup_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);
double euclidean_distance(std::span<const double> a, std::span<const double> b);

}  // namespace leantopo

#endif
