#ifndef LEANTOPO_SAMPLERS_HPP
#define LEANTOPO_SAMPLERS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "leantopo/point_cloud.hpp"

namespace leantopo {

/**
 * A generated sample plus the analytic side information the tests need:
 * per-point unit normals (as spanning vectors of the normal space), a
 * local-feature-size oracle, and ground-truth Betti numbers.
 */
struct ManifoldSample {
    std::string name;
    PointCloud cloud;
    // One row block of (k - s) unit vectors per point, row-major.
    std::vector<std::vector<double>> normals;
    std::vector<double> lfs;  // per point; exact or certified lower bound
    bool lfs_exact = false;
    std::vector<std::size_t> true_betti;
};

// Circle of given radius in R^2; lfs == radius (exact); Betti (1,1).
ManifoldSample sample_circle(double radius, std::size_t n);

// Closed planar curve with a thin neck between two lobes (a Cassini-style
// oval). Sampled adaptively: arc-length steps proportional to the local
// curvature radius, clamped by the neck clearance near the waist. lfs is a
// certified lower bound. Betti (1,1).
ManifoldSample sample_neck_curve(double neck_width, double eps,
                                 double lobe_scale = 10.0);

// Closed 3D coil: a loop winding around a torus. Betti (1,1).
ManifoldSample sample_helix_loop(std::size_t n, double major_radius = 1.0,
                                 double minor_radius = 0.2, int windings = 20);

// Torus of revolution (R, r) in R^3; lfs lower bound min(r, R - r)
// (certified, not exact); Betti (1,2,1).
ManifoldSample sample_torus(double R, double r, std::size_t n);

// Sphere in R^3 via a Fibonacci lattice; lfs == radius; Betti (1,0,1).
ManifoldSample sample_sphere(double radius, std::size_t n);

// Displaces each point along its analytic normal by u * diameter, with u
// uniform in [-scale, scale]; seeded, bit-reproducible.
ManifoldSample add_normal_noise(const ManifoldSample& sample, double scale,
                                std::uint64_t seed);

ManifoldSample sample_by_name(const std::string& name,
                              const std::vector<double>& params);

}  // namespace leantopo

#endif
