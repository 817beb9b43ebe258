#include "leantopo/tangent_estimation.hpp"

#include <cmath>
#include <string>

namespace leantopo {

TangentEstimate estimate_tangent_basis(const PointCloud& cloud,
                                       const SpatialIndex& index,
                                       std::size_t p) {
    const int k = cloud.ambient_dim();
    const int s = cloud.intrinsic_dim();
    if (cloud.size() < static_cast<std::size_t>(s) + 1)
        throw Error(ErrorCode::InsufficientCandidates,
                    "cloud smaller than s+1 points");

    const Eigen::VectorXd origin = cloud.point_vec(p);
    Eigen::MatrixXd edges(k, s);
    std::vector<std::size_t> witnesses{p};

    const double min_angle = M_PI / 2.0 - kTangentAngleWindow;
    int found = 0;
    std::size_t want = 16;
    while (found < s) {
        const auto cand = index.k_nearest(cloud.point(p), want, p);
        bool progressed = false;
        // Candidates come back sorted by distance, so a linear pass picks
        // the closest admissible point at each stage.
        for (const auto& c : cand) {
            if (found >= s) break;
            bool used = false;
            for (std::size_t w : witnesses)
                if (w == c.id) used = true;
            if (used) continue;
            const Eigen::VectorXd disp = cloud.point_vec(c.id) - origin;
            if (found > 0) {
                const SubspaceBasis span =
                    SubspaceBasis::from_spanning_vectors(edges.leftCols(found));
                if (vector_subspace_angle(disp, span) < min_angle) continue;
            }
            edges.col(found) = disp;
            witnesses.push_back(c.id);
            ++found;
            progressed = true;
        }
        if (found >= s) break;
        if (cand.size() + 1 >= cloud.size() && !progressed)
            throw Error(ErrorCode::InsufficientCandidates,
                        "no point satisfies the angle window at point " +
                            std::to_string(p));
        if (cand.size() + 1 >= cloud.size() && progressed) continue;
        want *= 2;
    }

    SubspaceBasis tangent = [&] {
        try {
            return SubspaceBasis::from_spanning_vectors(edges);
        } catch (const Error&) {
            throw Error(ErrorCode::InsufficientCandidates,
                        "degenerate simplex at point " + std::to_string(p));
        }
    }();
    if (s == k) {
        // Full-dimensional data: no normal space to speak of.
        return TangentEstimate{p, tangent, tangent, std::move(witnesses)};
    }
    SubspaceBasis normal = tangent.complement();
    return TangentEstimate{p, std::move(tangent), std::move(normal),
                           std::move(witnesses)};
}

std::vector<TangentEstimate> estimate_all_normals(const PointCloud& cloud,
                                                  const SpatialIndex& index) {
    std::vector<TangentEstimate> out;
    out.reserve(cloud.size());
    for (std::size_t p = 0; p < cloud.size(); ++p)
        out.push_back(estimate_tangent_basis(cloud, index, p));
    return out;
}

std::vector<TangentEstimate> normals_from_rows(
    const PointCloud& cloud, const std::vector<std::vector<double>>& rows) {
    const int k = cloud.ambient_dim();
    const int m = k - cloud.intrinsic_dim();
    if (m < 1)
        throw Error(ErrorCode::DimensionMismatch,
                    "no normal space when intrinsic dim equals ambient dim");
    if (rows.size() != cloud.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "need one normal row per point");
    std::vector<TangentEstimate> out;
    out.reserve(cloud.size());
    for (std::size_t p = 0; p < cloud.size(); ++p) {
        if (rows[p].size() != static_cast<std::size_t>(m) * k)
            throw Error(ErrorCode::DimensionMismatch,
                        "normal row " + std::to_string(p) + " must hold " +
                            std::to_string(m) + " vectors of " +
                            std::to_string(k) + " coordinates");
        Eigen::MatrixXd vecs(k, m);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < k; ++i) vecs(i, j) = rows[p][j * k + i];
        SubspaceBasis normal = SubspaceBasis::from_spanning_vectors(vecs);
        SubspaceBasis tangent = normal.complement();
        out.push_back(TangentEstimate{p, std::move(tangent), std::move(normal),
                                      {p}});
    }
    return out;
}

}  // namespace leantopo
