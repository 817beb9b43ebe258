#include "leantopo/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "leantopo/subspace.hpp"

namespace leantopo {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Orthonormal spanning vectors of the plane perpendicular to a unit
// tangent in R^3.
std::vector<double> normal_plane_of(const Eigen::Vector3d& tangent) {
    Eigen::Matrix<double, 3, 1> t = tangent.normalized();
    SubspaceBasis tb = SubspaceBasis::from_spanning_vectors(t);
    SubspaceBasis nb = tb.complement();
    std::vector<double> out(6);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 3; ++i) out[j * 3 + i] = nb.matrix()(i, j);
    return out;
}

}  // namespace

ManifoldSample sample_circle(double radius, std::size_t n) {
    if (radius <= 0) throw Error(ErrorCode::OutOfRange, "radius must be > 0");
    if (n < 16)
        throw Error(ErrorCode::UnderSampled, "circle needs at least 16 points");
    ManifoldSample s{"circle", PointCloud(2, 1), {}, {}, true, {1, 1}};
    for (std::size_t i = 0; i < n; ++i) {
        const double t = kTau * static_cast<double>(i) / static_cast<double>(n);
        const double c = std::cos(t), d = std::sin(t);
        s.cloud.add_point(std::vector<double>{radius * c, radius * d});
        s.normals.push_back({c, d});
        s.lfs.push_back(radius);
    }
    return s;
}

namespace {

// Cassini-style oval: (x^2+y^2)^2 - 2 a^2 (x^2 - y^2) = b^4 - a^4, with
// b^2 = a^2 + (w/2)^2 so the waist on the y-axis has total width w.
struct NeckOval {
    double a, b, w;

    double radius_at(double phi) const {
        const double c2 = std::cos(2 * phi), s2 = std::sin(2 * phi);
        const double root =
            std::sqrt(std::max(b * b * b * b - a * a * a * a * s2 * s2, 0.0));
        return std::sqrt(std::max(a * a * c2 + root, 0.0));
    }
    void gradient(double x, double y, double& fx, double& fy) const {
        const double rr = x * x + y * y;
        fx = 4 * x * rr - 4 * a * a * x;
        fy = 4 * y * rr + 4 * a * a * y;
    }
    double curvature_radius(double x, double y) const {
        const double rr = x * x + y * y;
        double fx, fy;
        gradient(x, y, fx, fy);
        const double fxx = 4 * rr + 8 * x * x - 4 * a * a;
        const double fyy = 4 * rr + 8 * y * y + 4 * a * a;
        const double fxy = 8 * x * y;
        const double g = std::sqrt(fx * fx + fy * fy);
        const double num = fxx * fy * fy - 2 * fxy * fx * fy + fyy * fx * fx;
        if (num == 0.0) return std::numeric_limits<double>::max();
        return g * g * g / std::abs(num);
    }
    // Feature-scale proxy: curvature radius clamped by the distance to the
    // origin (the origin is a medial point between the two waist arcs).
    double feature_scale(double x, double y) const {
        return std::min(curvature_radius(x, y), std::sqrt(x * x + y * y));
    }
    // Step oracle for adaptive sampling: an estimate of the adaptive
    // feature size. Away from the waist the nearest midpoint of an
    // admissible pair sits at roughly (1 - cos(pi/5)) of the curvature
    // radius (the circle ratio); where the two branches face each other
    // (normal within 54 degrees of the symmetry axis) it is the
    // half-clearance |y| instead.
    double step_scale(double x, double y) const {
        constexpr double kChordRatio = 0.19098300562505255;  // 1 - cos(pi/5)
        double s = std::min(kChordRatio * curvature_radius(x, y),
                            std::sqrt(x * x + y * y));
        double fx, fy;
        gradient(x, y, fx, fy);
        const double g = std::sqrt(fx * fx + fy * fy);
        constexpr double kCos54 = 0.58778525229247314;  // cos(3pi/10)
        if (std::abs(fy) >= kCos54 * g)
            s = std::min(s, std::max(std::abs(y), 1e-6 * w));
        return s;
    }
};

}  // namespace

ManifoldSample sample_neck_curve(double neck_width, double eps,
                                 double lobe_scale) {
    if (neck_width <= 0 || lobe_scale <= 0)
        throw Error(ErrorCode::OutOfRange, "neck parameters must be > 0");
    if (!(eps > 0 && eps <= 0.5))
        throw Error(ErrorCode::OutOfRange, "eps must lie in (0, 0.5]");
    NeckOval oval{lobe_scale,
                  std::sqrt(lobe_scale * lobe_scale +
                            0.25 * neck_width * neck_width),
                  neck_width};

    ManifoldSample s{"neck", PointCloud(2, 1), {}, {}, false, {1, 1}};
    const std::size_t cap = 2'000'000;
    double phi = 0.0;
    while (phi < kTau) {
        const double r = oval.radius_at(phi);
        const double x = r * std::cos(phi), y = r * std::sin(phi);
        double fx, fy;
        oval.gradient(x, y, fx, fy);
        const double g = std::sqrt(fx * fx + fy * fy);
        s.cloud.add_point(std::vector<double>{x, y});
        s.normals.push_back({fx / g, fy / g});
        s.lfs.push_back(oval.feature_scale(x, y));

        // Arc-length step proportional to the local feature scale.
        const double dh = 1e-7;
        const double r2 = oval.radius_at(phi + dh);
        const double speed = std::max(
            std::sqrt(r * r + std::pow((r2 - r) / dh, 2)), 1e-12);
        phi += eps * oval.step_scale(x, y) / speed;
        if (s.cloud.size() > cap)
            throw Error(ErrorCode::UnderSampled,
                        "eps too small: sample would exceed the point cap");
    }
    if (s.cloud.size() < 64)
        throw Error(ErrorCode::UnderSampled, "eps too coarse for the neck curve");
    return s;
}

ManifoldSample sample_helix_loop(std::size_t n, double major_radius,
                                 double minor_radius, int windings) {
    if (n < 100)
        throw Error(ErrorCode::UnderSampled, "helix loop needs >= 100 points");
    ManifoldSample s{"helix", PointCloud(3, 1), {}, {}, false, {1, 1}};
    const double R = major_radius, r = minor_radius;
    const double w = static_cast<double>(windings);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = kTau * static_cast<double>(i) / static_cast<double>(n);
        const double cw = std::cos(w * t), sw = std::sin(w * t);
        const double ct = std::cos(t), st = std::sin(t);
        const double ring = R + r * cw;
        s.cloud.add_point(std::vector<double>{ring * ct, ring * st, r * sw});
        // d/dt of the curve, for the normal plane.
        Eigen::Vector3d tangent(-r * w * sw * ct - ring * st,
                                -r * w * sw * st + ring * ct, r * w * cw);
        auto nb = normal_plane_of(tangent);
        s.normals.push_back(std::move(nb));
    }
    // Certified-style scale bound: half the distance to the nearest
    // non-adjacent strand, computed from the sample itself.
    const std::size_t guard = std::max<std::size_t>(4, n / (2 * windings));
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::max();
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t gap = std::min((i + n - j) % n, (j + n - i) % n);
            if (gap <= guard) continue;
            best = std::min(best, s.cloud.distance(i, j));
        }
        s.lfs.push_back(0.5 * best);
    }
    return s;
}

ManifoldSample sample_torus(double R, double r, std::size_t n) {
    if (!(R > r && r > 0))
        throw Error(ErrorCode::OutOfRange, "torus needs R > r > 0");
    if (n < 200)
        throw Error(ErrorCode::UnderSampled, "torus needs >= 200 points");
    ManifoldSample s{"torus", PointCloud(3, 2), {}, {}, false, {1, 2, 1}};

    // Staggered rows in the tube angle, with per-row counts proportional
    // to the ring circumference, so spacing is near uniform.
    const std::size_t nv = std::max<std::size_t>(
        8, static_cast<std::size_t>(std::lround(std::sqrt(
               static_cast<double>(n) * r / R))));
    double weight_total = 0.0;
    std::vector<double> weights(nv);
    for (std::size_t j = 0; j < nv; ++j) {
        const double v = kTau * static_cast<double>(j) / static_cast<double>(nv);
        weights[j] = R + r * std::cos(v);
        weight_total += weights[j];
    }
    for (std::size_t j = 0; j < nv; ++j) {
        const double v = kTau * static_cast<double>(j) / static_cast<double>(nv);
        const std::size_t nu = std::max<std::size_t>(
            3, static_cast<std::size_t>(
                   std::lround(static_cast<double>(n) * weights[j] /
                               weight_total)));
        const double offset = (j % 2 == 0) ? 0.0 : 0.5;
        for (std::size_t i = 0; i < nu; ++i) {
            const double u = kTau * (static_cast<double>(i) + offset) /
                             static_cast<double>(nu);
            const double cu = std::cos(u), su = std::sin(u);
            const double cv = std::cos(v), sv = std::sin(v);
            const double ring = R + r * cv;
            s.cloud.add_point(
                std::vector<double>{ring * cu, ring * su, r * sv});
            s.normals.push_back({cv * cu, cv * su, sv});
            s.lfs.push_back(std::min(r, ring));
        }
    }
    return s;
}

ManifoldSample sample_sphere(double radius, std::size_t n) {
    if (radius <= 0) throw Error(ErrorCode::OutOfRange, "radius must be > 0");
    if (n < 100)
        throw Error(ErrorCode::UnderSampled, "sphere needs >= 100 points");
    ManifoldSample s{"sphere", PointCloud(3, 2), {}, {}, true, {1, 0, 1}};
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < n; ++i) {
        const double z =
            1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const double rho = std::sqrt(std::max(1.0 - z * z, 0.0));
        const double t = golden * static_cast<double>(i);
        const double x = rho * std::cos(t), y = rho * std::sin(t);
        s.cloud.add_point(
            std::vector<double>{radius * x, radius * y, radius * z});
        s.normals.push_back({x, y, z});
        s.lfs.push_back(radius);
    }
    return s;
}

ManifoldSample add_normal_noise(const ManifoldSample& sample, double scale,
                                std::uint64_t seed) {
    if (scale < 0) throw Error(ErrorCode::OutOfRange, "scale must be >= 0");
    const double diameter = sample.cloud.bbox_diameter();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-scale, scale);

    ManifoldSample out = sample;
    out.cloud = PointCloud(sample.cloud.ambient_dim(),
                           sample.cloud.intrinsic_dim());
    const int k = sample.cloud.ambient_dim();
    std::vector<double> buf(k);
    for (std::size_t i = 0; i < sample.cloud.size(); ++i) {
        const double amp = u(rng) * diameter;
        auto p = sample.cloud.point(i);
        const auto& nrm = sample.normals[i];  // first normal vector
        for (int d = 0; d < k; ++d) buf[d] = p[d] + amp * nrm[d];
        out.cloud.add_point(buf);
    }
    out.name = sample.name + "+noise";
    return out;
}

ManifoldSample sample_by_name(const std::string& name,
                              const std::vector<double>& params) {
    auto arg = [&](std::size_t i, double fallback) {
        return i < params.size() ? params[i] : fallback;
    };
    if (name == "circle")
        return sample_circle(arg(0, 1.0), static_cast<std::size_t>(arg(1, 360)));
    if (name == "neck")
        return sample_neck_curve(arg(0, 0.05), arg(1, 0.02), arg(2, 10.0));
    if (name == "helix")
        return sample_helix_loop(static_cast<std::size_t>(arg(0, 1000)));
    if (name == "torus")
        return sample_torus(arg(0, 2.0), arg(1, 0.8),
                            static_cast<std::size_t>(arg(2, 5000)));
    if (name == "sphere")
        return sample_sphere(arg(0, 1.0), static_cast<std::size_t>(arg(1, 4000)));
    throw Error(ErrorCode::BadInput, "unknown manifold name: " + name);
}

}  // namespace leantopo
