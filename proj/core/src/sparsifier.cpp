#include "leantopo/sparsifier.hpp"

#include <algorithm>
#include <cmath>

namespace leantopo {

SparseSample lean_sparsify(const PointCloud& cloud,
                           const std::vector<double>& lnfs_of, double rho) {
    if (rho <= 0.0)
        throw Error(ErrorCode::OutOfRange, "rho must be positive");
    const std::size_t n = cloud.size();
    if (lnfs_of.size() != n)
        throw Error(ErrorCode::MissingLnfs,
                    "need an lnfs value for every point");
    for (double v : lnfs_of)
        if (!(std::isfinite(v)))
            throw Error(ErrorCode::MissingLnfs, "non-finite lnfs value");

    // Priorities are static, so a sorted order stands in for the queue;
    // lazy deletion flags avoid index rebuilds.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lnfs_of[a] != lnfs_of[b] ? lnfs_of[a] > lnfs_of[b] : a < b;
    });

    SparseSample out;
    out.rho = rho;
    out.lnfs_of = lnfs_of;
    out.deleted_by.assign(n, SparseSample::kSelf);
    std::vector<bool> gone(n, false);

    SpatialIndex index(cloud);
    for (std::size_t q : order) {
        if (gone[q]) continue;
        out.retained.push_back(q);
        const double radius = rho * lnfs_of[q];
        for (std::size_t p : index.points_in_ball(cloud.point(q), radius)) {
            if (p == q || gone[p]) continue;
            gone[p] = true;
            out.deleted_by[p] = q;
        }
    }
    return out;
}

UniformityReport verify_uniformity(const SparseSample& sample,
                                   const PointCloud& cloud,
                                   const std::vector<double>& lnfs_of) {
    UniformityReport rep;
    rep.coverage_factor = 1.2 * sample.rho;

    // (a) exact sparsity between retained points, in extraction order.
    const auto& ret = sample.retained;
    for (std::size_t a = 0; a < ret.size(); ++a) {
        for (std::size_t b = a + 1; b < ret.size(); ++b) {
            if (cloud.distance(ret[a], ret[b]) <=
                sample.rho * lnfs_of[ret[a]])
                rep.sparsity_violations.emplace_back(ret[a], ret[b]);
        }
    }
    rep.sparsity_ok = rep.sparsity_violations.empty();

    // (b) coverage of every input point by its retainer.
    for (std::size_t p = 0; p < cloud.size(); ++p) {
        const std::size_t q = sample.is_retained(p) ? p : sample.deleted_by[p];
        if (cloud.distance(p, q) > rep.coverage_factor * lnfs_of[q])
            rep.coverage_violations.push_back(p);
    }
    rep.coverage_ok = rep.coverage_violations.empty();
    return rep;
}

}  // namespace leantopo
