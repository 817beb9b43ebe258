#include "leantopo/lean_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace leantopo {

double c_beta(double beta) {
    if (!(beta > 0.0 && beta < M_PI / 2.0))
        throw Error(ErrorCode::OutOfRange, "beta must lie in (0, pi/2)");
    return std::tan(beta / 2.0) / 3.0;
}

namespace {

// Chord/normal alignment test (condition 1). Cheap, rejects most pairs.
// angle(chord, normal space) <= pi/2 - beta  <=>
// ||N^T chord||^2 >= sin^2(beta) * ||chord||^2, with no trig per pair.
bool chord_aligned(const PointCloud& cloud,
                   const std::vector<TangentEstimate>& normals, std::size_t p,
                   std::size_t q, double beta) {
    const Eigen::VectorXd chord = cloud.point_vec(q) - cloud.point_vec(p);
    const double s = std::sin(beta);
    const double bound = s * s * chord.squaredNorm();
    if ((normals[p].normal_basis.matrix().transpose() * chord).squaredNorm() <
        bound)
        return false;
    return (normals[q].normal_basis.matrix().transpose() * chord)
               .squaredNorm() >= bound;
}

void check_normals(const PointCloud& cloud,
                   const std::vector<TangentEstimate>& normals, std::size_t p,
                   std::size_t q) {
    if (p >= normals.size() || q >= normals.size() ||
        normals[p].point_id != p || normals[q].point_id != q)
        throw Error(ErrorCode::MissingNormal,
                    "normal estimates missing for the queried pair");
    if (cloud.intrinsic_dim() == cloud.ambient_dim())
        throw Error(ErrorCode::MissingNormal,
                    "no normal space when intrinsic dim equals ambient dim");
}

}  // namespace

bool is_beta_good(const PointCloud& cloud,
                  const std::vector<TangentEstimate>& normals,
                  const SpatialIndex& index, std::size_t p, std::size_t q,
                  double beta, std::optional<double> c_beta_override) {
    if (p == q) throw Error(ErrorCode::BadInput, "pair ids must differ");
    check_normals(cloud, normals, p, q);
    if (!chord_aligned(cloud, normals, p, q, beta)) return false;

    const double cb = c_beta_override.value_or(c_beta(beta));
    const double d = cloud.distance(p, q);
    std::vector<double> mid(cloud.ambient_dim());
    auto pp = cloud.point(p);
    auto qq = cloud.point(q);
    for (int i = 0; i < cloud.ambient_dim(); ++i)
        mid[i] = 0.5 * (pp[i] + qq[i]);
    // p and q are excluded explicitly; for c_beta < 1/2 this is a no-op
    // since d(p, mid) = d/2 > c_beta * d, but the practical override 0.5
    // puts both exactly on the closed-ball boundary.
    const std::size_t excl[2] = {p, q};
    return index.ball_is_empty(mid, cb * d, excl);
}

LeanSet build_lean_set(const PointCloud& cloud,
                       const std::vector<TangentEstimate>& normals,
                       const SpatialIndex& index, double beta,
                       std::optional<double> c_beta_override) {
    if (normals.size() != cloud.size())
        throw Error(ErrorCode::MissingNormal,
                    "need a normal estimate for every point");
    LeanSet lean;
    lean.beta = beta;
    lean.c_beta = c_beta_override.value_or(c_beta(beta));
    lean.c_beta_overridden = c_beta_override.has_value();

    const std::size_t n = cloud.size();
    const int k = cloud.ambient_dim();
    if (n > 0) check_normals(cloud, normals, 0, 0);
    std::vector<double> mid(k);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto pi = cloud.point(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!chord_aligned(cloud, normals, i, j, beta)) continue;
            auto pj = cloud.point(j);
            for (int d = 0; d < k; ++d) mid[d] = 0.5 * (pi[d] + pj[d]);
            const double dist = cloud.distance(i, j);
            const std::size_t excl[2] = {i, j};
            if (!index.ball_is_empty(mid, lean.c_beta * dist, excl)) continue;
            lean.points.push_back({mid, i, j, dist});
        }
    }
    return lean;
}

LeanSet reduce_lean_set(const LeanSet& lean, const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> best(n, kNone);  // lean point index per sample
    std::vector<double> best_d(n, std::numeric_limits<double>::max());
    for (std::size_t i = 0; i < lean.points.size(); ++i) {
        const auto& lp = lean.points[i];
        for (std::size_t endpoint : {lp.pair_first, lp.pair_second}) {
            if (lp.pair_distance < best_d[endpoint] ||
                (lp.pair_distance == best_d[endpoint] &&
                 i < best[endpoint])) {
                best_d[endpoint] = lp.pair_distance;
                best[endpoint] = i;
            }
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t p = 0; p < n; ++p)
        if (best[p] != kNone) keep.push_back(best[p]);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    LeanSet out;
    out.beta = lean.beta;
    out.c_beta = lean.c_beta;
    out.c_beta_overridden = lean.c_beta_overridden;
    out.reduced = true;
    out.points.reserve(keep.size());
    for (std::size_t i : keep) out.points.push_back(lean.points[i]);
    return out;
}

LeanSet noise_filter(const LeanSet& lean, double min_pair_distance) {
    if (min_pair_distance < 0)
        throw Error(ErrorCode::OutOfRange, "threshold must be >= 0");
    LeanSet out = lean;
    std::erase_if(out.points, [&](const LeanPoint& lp) {
        return lp.pair_distance < min_pair_distance;
    });
    return out;
}

PointCloud LeanSet::as_cloud(int ambient_dim, int intrinsic_dim) const {
    PointCloud out(ambient_dim, intrinsic_dim);
    for (const auto& lp : points) out.add_point(lp.midpoint);
    return out;
}

LeanFeatureSize::LeanFeatureSize(const LeanSet& lean, int ambient_dim,
                                 int intrinsic_dim)
    : midpoint_cloud_([&] {
          if (lean.empty())
              throw Error(ErrorCode::EmptyLeanSet,
                          "lean set is empty; input likely violates the "
                          "manifold/density assumptions");
          return lean.as_cloud(ambient_dim, intrinsic_dim);
      }()),
      midpoint_index_(midpoint_cloud_) {}

double LeanFeatureSize::operator()(std::span<const double> x) const {
    return midpoint_index_.nearest_neighbor(x).distance;
}

}  // namespace leantopo
