#include "leantopo/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace leantopo {

namespace {

// Median nearest-neighbor spacing estimated on a subset; used to pick the
// grid cell size.
double estimate_nn_spacing(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    const std::size_t m = std::min<std::size_t>(n, 256);
    std::mt19937_64 rng(12345);
    std::vector<std::size_t> probe(m);
    if (m == n) {
        for (std::size_t i = 0; i < n; ++i) probe[i] = i;
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (auto& p : probe) p = pick(rng);
    }
    std::vector<double> nn(m, std::numeric_limits<double>::max());
    for (std::size_t t = 0; t < m; ++t) {
        const auto pi = cloud.point(probe[t]);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == probe[t]) continue;
            nn[t] = std::min(nn[t], squared_distance(pi, cloud.point(j)));
        }
    }
    std::nth_element(nn.begin(), nn.begin() + m / 2, nn.end());
    return std::sqrt(nn[m / 2]);
}

}  // namespace

std::size_t SpatialIndex::CellKeyHash::operator()(
    const std::vector<int64_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int64_t x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
             (h >> 2);
    }
    return h;
}

SpatialIndex::SpatialIndex(const PointCloud& cloud, Mode mode)
    : cloud_(&cloud) {
    if (cloud.empty())
        throw Error(ErrorCode::EmptyCloud, "cannot index an empty cloud");

    grid_enabled_ = (mode == Mode::Grid) ||
                    (mode == Mode::Auto && cloud.size() >= kBruteForceCutoff);
    if (!grid_enabled_) return;

    const int k = cloud.ambient_dim();
    origin_.assign(k, std::numeric_limits<double>::max());
    const std::size_t n = cloud.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto p = cloud.point(i);
        for (int d = 0; d < k; ++d) origin_[d] = std::min(origin_[d], p[d]);
    }
    const double spacing = estimate_nn_spacing(cloud);
    cell_size_ = std::max(spacing * 4.0, 1e-300);
    cell_lo_.assign(k, std::numeric_limits<int64_t>::max());
    cell_hi_.assign(k, std::numeric_limits<int64_t>::min());
    for (std::size_t i = 0; i < n; ++i) {
        auto key = cell_of(cloud.point(i));
        for (int d = 0; d < k; ++d) {
            cell_lo_[d] = std::min(cell_lo_[d], key[d]);
            cell_hi_[d] = std::max(cell_hi_[d], key[d]);
        }
        cells_[std::move(key)].push_back(i);
    }
}

std::vector<int64_t> SpatialIndex::cell_of(std::span<const double> x) const {
    std::vector<int64_t> key(x.size());
    for (std::size_t d = 0; d < x.size(); ++d)
        key[d] = static_cast<int64_t>(std::floor((x[d] - origin_[d]) / cell_size_));
    return key;
}

void SpatialIndex::visit_cell_range(
    std::span<const double> center, double radius,
    const std::function<bool(std::size_t)>& fn) const {
    const int k = cloud_->ambient_dim();
    std::vector<int64_t> lo(k), hi(k), cur(k);
    double box_cells = 1.0;
    for (int d = 0; d < k; ++d) {
        lo[d] = static_cast<int64_t>(
            std::floor((center[d] - radius - origin_[d]) / cell_size_));
        hi[d] = static_cast<int64_t>(
            std::floor((center[d] + radius - origin_[d]) / cell_size_));
        box_cells *= static_cast<double>(hi[d] - lo[d] + 1);
    }

    // When the query box spans more cells than are occupied, scan the
    // occupied cells instead and reject by box distance.
    if (box_cells > static_cast<double>(cells_.size())) {
        const double r_sq = radius * radius;
        for (const auto& [key, ids] : cells_) {
            double d2 = 0.0;
            for (int d = 0; d < k; ++d) {
                const double clo = origin_[d] + key[d] * cell_size_;
                const double chi = clo + cell_size_;
                double gap = 0.0;
                if (center[d] < clo)
                    gap = clo - center[d];
                else if (center[d] > chi)
                    gap = center[d] - chi;
                d2 += gap * gap;
            }
            if (d2 > r_sq) continue;
            for (std::size_t id : ids)
                if (!fn(id)) return;
        }
        return;
    }

    // Odometer walk over the cell box.
    cur = lo;
    while (true) {
        auto it = cells_.find(cur);
        if (it != cells_.end()) {
            for (std::size_t id : it->second)
                if (!fn(id)) return;
        }
        int d = 0;
        while (d < k && ++cur[d] > hi[d]) {
            cur[d] = lo[d];
            ++d;
        }
        if (d == k) break;
    }
}

SpatialIndex::NearestResult SpatialIndex::nearest_brute(
    std::span<const double> x, std::optional<std::size_t> exclude) const {
    const std::size_t n = cloud_->size();
    std::size_t best = n;
    double best_sq = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < n; ++i) {
        if (exclude && *exclude == i) continue;
        const double d2 = squared_distance(x, cloud_->point(i));
        if (d2 < best_sq) {
            best_sq = d2;
            best = i;
        }
    }
    if (best == n)
        throw Error(ErrorCode::EmptyCloud, "no candidate for nearest neighbor");
    return {best, std::sqrt(best_sq)};
}

SpatialIndex::NearestResult SpatialIndex::nearest_grid(
    std::span<const double> x, std::optional<std::size_t> exclude) const {
    const int k = cloud_->ambient_dim();

    // Far queries would walk huge empty shells; the linear scan is cheaper
    // once the query sits well outside the occupied box.
    double box_gap_sq = 0.0;
    for (int d = 0; d < k; ++d) {
        const double lo = origin_[d] + cell_lo_[d] * cell_size_;
        const double hi = origin_[d] + (cell_hi_[d] + 1) * cell_size_;
        double gap = 0.0;
        if (x[d] < lo) gap = lo - x[d];
        else if (x[d] > hi) gap = x[d] - hi;
        box_gap_sq += gap * gap;
    }
    if (box_gap_sq > (64.0 * cell_size_) * (64.0 * cell_size_))
        return nearest_brute(x, exclude);

    const auto cq = cell_of(x);
    std::size_t best = cloud_->size();
    double best_sq = std::numeric_limits<double>::max();

    const auto consider = [&](std::size_t id) {
        if (exclude && *exclude == id) return;
        const double d2 = squared_distance(x, cloud_->point(id));
        if (d2 < best_sq || (d2 == best_sq && id < best)) {
            best_sq = d2;
            best = id;
        }
    };

    // Expanding Chebyshev shells. After finishing shell s, any unvisited
    // point is at L-inf distance >= s * cell from the query.
    std::vector<int64_t> cur(k);
    for (int64_t s = 0;; ++s) {
        bool any_cell_possible = false;
        // Enumerate cells with Chebyshev distance exactly s from cq. In the
        // last free dimension, skip the interior when the boundary has not
        // been pinned yet, so the cost is proportional to the shell, not
        // the box.
        std::function<void(int, bool)> rec = [&](int d, bool on_boundary) {
            if (d == k) {
                auto it = cells_.find(cur);
                if (it != cells_.end())
                    for (std::size_t id : it->second) consider(id);
                return;
            }
            if (d == k - 1 && !on_boundary && s > 0) {
                for (int64_t off : {-s, s}) {
                    cur[d] = cq[d] + off;
                    rec(d + 1, true);
                }
                return;
            }
            for (int64_t off = -s; off <= s; ++off) {
                cur[d] = cq[d] + off;
                rec(d + 1, on_boundary || std::llabs(off) == s);
            }
        };
        rec(0, s == 0);
        // Strict inequality so an exact tie in a later shell still gets a
        // chance to win on smaller id.
        if (best < cloud_->size() &&
            std::sqrt(best_sq) < static_cast<double>(s) * cell_size_)
            break;
        // Safety stop once the shell box covers every occupied cell.
        any_cell_possible = false;
        for (int d = 0; d < k; ++d) {
            if (cq[d] - s > cell_lo_[d] || cq[d] + s < cell_hi_[d]) {
                any_cell_possible = true;
                break;
            }
        }
        if (!any_cell_possible) break;
    }
    if (best == cloud_->size())
        throw Error(ErrorCode::EmptyCloud, "no candidate for nearest neighbor");
    return {best, std::sqrt(best_sq)};
}

SpatialIndex::NearestResult SpatialIndex::nearest_neighbor(
    std::span<const double> x, std::optional<std::size_t> exclude) const {
    if (exclude && cloud_->size() < 2)
        throw Error(ErrorCode::EmptyCloud,
                    "cloud must hold >= 2 points when excluding one");
    if (!grid_enabled_) return nearest_brute(x, exclude);
    return nearest_grid(x, exclude);
}

bool SpatialIndex::ball_is_empty(std::span<const double> center, double radius,
                                 std::span<const std::size_t> exclude) const {
    if (radius < 0)
        throw Error(ErrorCode::OutOfRange, "ball radius must be >= 0");
    const double r_sq = radius * radius;
    const auto excluded = [&](std::size_t id) {
        return std::find(exclude.begin(), exclude.end(), id) != exclude.end();
    };
    bool empty = true;
    if (!grid_enabled_) {
        const std::size_t n = cloud_->size();
        for (std::size_t i = 0; i < n; ++i) {
            if (excluded(i)) continue;
            if (squared_distance(center, cloud_->point(i)) <= r_sq) return false;
        }
        return true;
    }
    visit_cell_range(center, radius, [&](std::size_t id) {
        if (excluded(id)) return true;
        if (squared_distance(center, cloud_->point(id)) <= r_sq) {
            empty = false;
            return false;
        }
        return true;
    });
    return empty;
}

std::vector<std::size_t> SpatialIndex::points_in_ball(
    std::span<const double> center, double radius) const {
    std::vector<std::size_t> out;
    const double r_sq = radius * radius;
    if (!grid_enabled_) {
        const std::size_t n = cloud_->size();
        for (std::size_t i = 0; i < n; ++i)
            if (squared_distance(center, cloud_->point(i)) <= r_sq)
                out.push_back(i);
        return out;
    }
    visit_cell_range(center, radius, [&](std::size_t id) {
        if (squared_distance(center, cloud_->point(id)) <= r_sq)
            out.push_back(id);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SpatialIndex::NearestResult> SpatialIndex::k_nearest(
    std::span<const double> x, std::size_t k,
    std::optional<std::size_t> exclude) const {
    std::vector<NearestResult> all;
    const auto rank = [](const NearestResult& a, const NearestResult& b) {
        return a.distance != b.distance ? a.distance < b.distance
                                        : a.id < b.id;
    };
    if (grid_enabled_) {
        double r = cell_size_;
        while (true) {
            auto ids = points_in_ball(x, r);
            all.clear();
            for (std::size_t id : ids) {
                if (exclude && *exclude == id) continue;
                all.push_back({id, euclidean_distance(x, cloud_->point(id))});
            }
            std::sort(all.begin(), all.end(), rank);
            if (all.size() >= k && all[k - 1].distance <= r) break;
            if (all.size() >= cloud_->size() - (exclude ? 1u : 0u)) break;
            r *= 2.0;
        }
    } else {
        const std::size_t n = cloud_->size();
        for (std::size_t i = 0; i < n; ++i) {
            if (exclude && *exclude == i) continue;
            all.push_back({i, euclidean_distance(x, cloud_->point(i))});
        }
        std::sort(all.begin(), all.end(), rank);
    }
    if (all.size() > k) all.resize(k);
    return all;
}

}  // namespace leantopo
