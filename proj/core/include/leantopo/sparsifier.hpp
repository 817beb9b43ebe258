#ifndef LEANTOPO_SPARSIFIER_HPP
#define LEANTOPO_SPARSIFIER_HPP

#include <vector>

#include "leantopo/point_cloud.hpp"
#include "leantopo/spatial_index.hpp"

namespace leantopo {

/**
 * Result of the greedy decimation: retained ids in extraction order,
 * together with a full audit of which retained point deleted which input
 * point.
 */
struct SparseSample {
    std::vector<std::size_t> retained;  // extraction order
    std::vector<double> lnfs_of;        // by point id, for all input points
    // deleted_by[p] = retainer id for deleted p; kSelf for retained points.
    std::vector<std::size_t> deleted_by;
    double rho = 0.0;

    static constexpr std::size_t kSelf = static_cast<std::size_t>(-1);

    bool is_retained(std::size_t id) const {
        return deleted_by[id] == kSelf;
    }
};

/**
 * Greedy max-priority decimation: repeatedly extract the surviving point q
 * with the largest feature-size value (ties to smallest id), keep it, and
 * delete every surviving point within closed radius rho * lnfs(q).
 */
SparseSample lean_sparsify(const PointCloud& cloud,
                           const std::vector<double>& lnfs_of, double rho);

struct UniformityReport {
    bool sparsity_ok = false;
    bool coverage_ok = false;
    // Offending ids, empty on pass.
    std::vector<std::pair<std::size_t, std::size_t>> sparsity_violations;
    std::vector<std::size_t> coverage_violations;
    double coverage_factor = 0.0;  // (6/5) * rho used for the check

    bool pass() const { return sparsity_ok && coverage_ok; }
};

// Checks (a) pairwise sparsity d(q,q') > rho * lnfs(q) for q extracted
// before q', and (b) that every input point lies within
// (6/5) * rho * lnfs(q) of some retained q.
UniformityReport verify_uniformity(const SparseSample& sample,
                                   const PointCloud& cloud,
                                   const std::vector<double>& lnfs_of);

}  // namespace leantopo

#endif
