#include "leantopo/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

namespace leantopo {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

PointCloud::PointCloud(int ambient_dim, int intrinsic_dim)
    : ambient_dim_(ambient_dim), intrinsic_dim_(intrinsic_dim) {
    if (ambient_dim < 1)
        throw Error(ErrorCode::BadInput, "ambient dimension must be >= 1");
    if (intrinsic_dim < 1 || intrinsic_dim > ambient_dim)
        throw Error(ErrorCode::BadInput,
                    "intrinsic dimension must satisfy 1 <= s <= k");
}

bool PointCloud::add_point(std::span<const double> coords) {
    if (static_cast<int>(coords.size()) != ambient_dim_)
        throw Error(ErrorCode::DimensionMismatch,
                    "point has wrong number of coordinates");
    // Dedup by exact coordinate equality.
    std::size_t h = 0xcbf29ce484222325ULL;
    for (double c : coords) {
        std::uint64_t bits;
        std::memcpy(&bits, &c, sizeof(bits));
        h ^= bits + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    auto& bucket = dedup_[h];
    for (std::size_t i : bucket) {
        if (std::equal(coords.begin(), coords.end(), point(i).begin())) {
            ++duplicates_removed_;
            return false;
        }
    }
    bucket.push_back(size());
    coords_.insert(coords_.end(), coords.begin(), coords.end());
    return true;
}

void PointCloud::add_points(const std::vector<std::vector<double>>& pts) {
    for (const auto& p : pts) add_point(p);
}

double PointCloud::distance(std::size_t i, std::size_t j) const {
    return euclidean_distance(point(i), point(j));
}

double PointCloud::distance_to(std::size_t i, std::span<const double> x) const {
    return euclidean_distance(point(i), x);
}

double PointCloud::bbox_diameter() const {
    if (empty()) return 0.0;
    std::vector<double> lo(ambient_dim_, std::numeric_limits<double>::max());
    std::vector<double> hi(ambient_dim_, std::numeric_limits<double>::lowest());
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        auto p = point(i);
        for (int d = 0; d < ambient_dim_; ++d) {
            lo[d] = std::min(lo[d], p[d]);
            hi[d] = std::max(hi[d], p[d]);
        }
    }
    double s = 0.0;
    for (int d = 0; d < ambient_dim_; ++d) {
        const double e = hi[d] - lo[d];
        s += e * e;
    }
    return std::sqrt(s);
}

PointCloud PointCloud::scaled(double lambda) const {
    PointCloud out(ambient_dim_, intrinsic_dim_);
    std::vector<double> buf(ambient_dim_);
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        auto p = point(i);
        for (int d = 0; d < ambient_dim_; ++d) buf[d] = p[d] * lambda;
        out.add_point(buf);
    }
    return out;
}

}  // namespace leantopo
