#ifndef LEANTOPO_SPATIAL_INDEX_HPP
#define LEANTOPO_SPATIAL_INDEX_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "leantopo/point_cloud.hpp"

namespace leantopo {

/**
 * Exact spatial queries over an immutable point cloud.
 *
 * Backed by a uniform grid keyed on integer cell coordinates; every query
 * has a brute-force twin used both as a fallback for small clouds and as
 * the correctness oracle in tests. Accelerated and brute-force answers are
 * identical, not approximate.
 */
class SpatialIndex {
  public:
    enum class Mode { Auto, BruteForce, Grid };

    // Clouds below this size default to the brute-force path.
    static constexpr std::size_t kBruteForceCutoff = 512;

    explicit SpatialIndex(const PointCloud& cloud, Mode mode = Mode::Auto);

    const PointCloud& cloud() const { return *cloud_; }
    std::size_t size() const { return cloud_->size(); }
    bool grid_enabled() const { return grid_enabled_; }

    struct NearestResult {
        std::size_t id;
        double distance;
    };

    // Exact nearest neighbor; ties broken by smallest point id.
    NearestResult nearest_neighbor(
        std::span<const double> x,
        std::optional<std::size_t> exclude = std::nullopt) const;

    // True iff no non-excluded point lies in the closed ball B(center, radius).
    bool ball_is_empty(std::span<const double> center, double radius,
                       std::span<const std::size_t> exclude = {}) const;

    // Ids of all points with d(center, p) <= radius (closed ball), sorted.
    std::vector<std::size_t> points_in_ball(std::span<const double> center,
                                            double radius) const;

    // The k nearest points to x (excluding `exclude`), closest first;
    // equal distances ordered by id.
    std::vector<NearestResult> k_nearest(
        std::span<const double> x, std::size_t k,
        std::optional<std::size_t> exclude = std::nullopt) const;

    double cell_size() const { return cell_size_; }

  private:
    struct CellKeyHash {
        std::size_t operator()(const std::vector<int64_t>& v) const;
    };

    std::vector<int64_t> cell_of(std::span<const double> x) const;
    void visit_cell_range(std::span<const double> center, double radius,
                          const std::function<bool(std::size_t)>& fn) const;

    NearestResult nearest_brute(std::span<const double> x,
                                std::optional<std::size_t> exclude) const;
    NearestResult nearest_grid(std::span<const double> x,
                               std::optional<std::size_t> exclude) const;

    const PointCloud* cloud_;
    bool grid_enabled_ = false;
    double cell_size_ = 1.0;
    std::vector<double> origin_;
    std::vector<int64_t> cell_lo_, cell_hi_;  // occupied-cell bounds per dim
    std::unordered_map<std::vector<int64_t>, std::vector<std::size_t>,
                       CellKeyHash>
        cells_;
};

}  // namespace leantopo

#endif
