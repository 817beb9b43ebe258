// Admissible-pair (lean set) machinery, tangent estimation, and the
// greedy sparsifier, checked against hand geometry and linear-scan
// oracles.

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "leantopo/lean_set.hpp"
#include "leantopo/pipeline.hpp"
#include "leantopo/samplers.hpp"
#include "leantopo/sparsifier.hpp"
#include "leantopo/spatial_index.hpp"
#include "leantopo/tangent_estimation.hpp"
#include "oracles.hpp"

using namespace leantopo;

namespace {

constexpr double kBeta = M_PI / 5.0;

// Exact radial normals for points on a circle about the origin.
std::vector<std::vector<double>> radial_normals(const PointCloud& cloud) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(i);
        const double r = std::hypot(p[0], p[1]);
        rows.push_back({p[0] / r, p[1] / r});
    }
    return rows;
}

}  // namespace

TEST_CASE("empty-ball constant follows the half-angle formula") {
    CHECK(c_beta(kBeta) == doctest::Approx(std::tan(kBeta / 2.0) / 3.0));
    CHECK(c_beta(kBeta) == doctest::Approx(0.10830657).epsilon(1e-6));
    CHECK_THROWS_AS(c_beta(0.0), Error);
    CHECK_THROWS_AS(c_beta(M_PI / 2.0), Error);
}

TEST_CASE("four points on a circle: full hand computation") {
    // Points at angles 0, 90, 180, 270 on the unit circle. Every pair's
    // chord is within pi/2 - beta = 54 degrees of both radial normals
    // (adjacent pairs sit at exactly 45), and every midpoint ball is far
    // from the other samples, so all six pairs qualify.
    PointCloud cloud(2, 1);
    cloud.add_point(std::vector<double>{1, 0});
    cloud.add_point(std::vector<double>{0, 1});
    cloud.add_point(std::vector<double>{-1, 0});
    cloud.add_point(std::vector<double>{0, -1});
    const SpatialIndex index(cloud);
    const auto normals = normals_from_rows(cloud, radial_normals(cloud));

    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(is_beta_good(cloud, normals, index, i, j, kBeta));

    const LeanSet lean = build_lean_set(cloud, normals, index, kBeta);
    CHECK(lean.size() == 6);
    CHECK(lean.c_beta == doctest::Approx(c_beta(kBeta)));

    // Reduction keeps one minimal pair per endpoint: each point's closest
    // admissible partners are the adjacent vertices (distance sqrt 2).
    // With ties broken toward the earlier pair, the four endpoints select
    // pairs (0,1), (0,3), and (1,2), i.e. 3 distinct midpoints.
    const LeanSet reduced = reduce_lean_set(lean, cloud);
    CHECK(reduced.size() == 3);
    for (const auto& lp : reduced.points)
        CHECK(lp.pair_distance == doctest::Approx(std::sqrt(2.0)));

    // lnfs of (1,0) = distance to the nearest adjacent midpoint
    // (0.5, +-0.5), i.e. sqrt(0.5).
    const LeanFeatureSize lnfs(reduced, 2, 1);
    CHECK(lnfs(cloud.point(0)) == doctest::Approx(std::sqrt(0.5)));

    // The same setup agrees with the definitional linear scan.
    const auto mids = oracle::lean_midpoints_linear(
        cloud, radial_normals(cloud), kBeta, c_beta(kBeta));
    CHECK(mids.size() == 6);
}

TEST_CASE("lean set on a dense circle matches the linear-scan oracle") {
    const std::size_t n = 120;
    PointCloud cloud(2, 1);
    for (std::size_t i = 0; i < n; ++i) {
        // irrational-step angles avoid symmetric boundary ties
        const double t = 2.0 * M_PI * std::fmod(i * 0.3819660112501051, 1.0);
        cloud.add_point(std::vector<double>{std::cos(t), std::sin(t)});
    }
    const SpatialIndex index(cloud);
    const auto rows = radial_normals(cloud);
    const auto normals = normals_from_rows(cloud, rows);
    const LeanSet lean = build_lean_set(cloud, normals, index, kBeta);
    const auto mids = oracle::lean_midpoints_linear(cloud, rows, kBeta,
                                                    c_beta(kBeta));
    REQUIRE(lean.size() == mids.size());

    // Same midpoints as sets (order may differ).
    auto key = [](const std::vector<double>& m) {
        return std::make_pair(m[0], m[1]);
    };
    std::vector<std::pair<double, double>> a, b;
    for (const auto& lp : lean.points) a.push_back(key(lp.midpoint));
    for (const auto& m : mids) b.push_back(key(m));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);

    // Every lean midpoint sits at depth >= (1 - cos beta') under the
    // circle, where beta' is half the minimal admissible chord angle.
    for (const auto& lp : lean.points) {
        const double r = std::hypot(lp.midpoint[0], lp.midpoint[1]);
        CHECK(r <= std::cos(2.0 * kBeta / 2.0) + 1e-12);
    }
}

TEST_CASE("pair admissibility rejects tangential chords") {
    // Nearly-collinear points on a line: chord parallel to the tangent,
    // orthogonal to the normal, never admissible.
    PointCloud cloud(2, 1);
    for (int i = 0; i < 8; ++i)
        cloud.add_point(std::vector<double>{0.1 * i, 0.0});
    const SpatialIndex index(cloud);
    std::vector<std::vector<double>> rows(8, std::vector<double>{0.0, 1.0});
    const auto normals = normals_from_rows(cloud, rows);
    for (std::size_t j = 1; j < 8; ++j)
        CHECK_FALSE(is_beta_good(cloud, normals, index, 0, j, kBeta));
    const LeanSet lean = build_lean_set(cloud, normals, index, kBeta);
    CHECK(lean.empty());
    CHECK_THROWS_AS(LeanFeatureSize(lean, 2, 1), Error);
}

TEST_CASE("noise filter thresholds pairs by distance") {
    PointCloud cloud(2, 1);
    cloud.add_point(std::vector<double>{1, 0});
    cloud.add_point(std::vector<double>{0, 1});
    cloud.add_point(std::vector<double>{-1, 0});
    cloud.add_point(std::vector<double>{0, -1});
    const SpatialIndex index(cloud);
    const auto normals = normals_from_rows(cloud, radial_normals(cloud));
    const LeanSet lean = build_lean_set(cloud, normals, index, kBeta);
    REQUIRE(lean.size() == 6);  // 4 pairs at sqrt(2), 2 at 2

    CHECK(noise_filter(lean, 0.0).size() == 6);           // unchanged
    CHECK(noise_filter(lean, 1.5).size() == 2);           // drops sqrt(2)
    CHECK(noise_filter(lean, 100.0).empty());             // everything
    CHECK_THROWS_AS(noise_filter(lean, -1.0), Error);
}

TEST_CASE("reduced lean set obeys the two-sided distance lemma") {
    // lnfs(p) <= d(p, reduced set) <= (1 + 1/c_beta) * lnfs(p).
    const auto s = sample_circle(1.0, 300);
    const SpatialIndex index(s.cloud);
    const auto normals = normals_from_rows(s.cloud, s.normals);
    const LeanSet lean = build_lean_set(s.cloud, normals, index, kBeta);
    const LeanSet reduced = reduce_lean_set(lean, s.cloud);
    const LeanFeatureSize full(lean, 2, 1);
    const LeanFeatureSize red(reduced, 2, 1);
    const double factor = 1.0 + 1.0 / c_beta(kBeta);
    for (std::size_t p = 0; p < s.cloud.size(); ++p) {
        const double lo = full(s.cloud.point(p));
        const double hi = red(s.cloud.point(p));
        CHECK(lo <= hi + 1e-12);
        CHECK(hi <= factor * lo + 1e-12);
    }
    CHECK(reduced.size() <= s.cloud.size());
    CHECK(reduced.reduced);
}

TEST_CASE("tangent estimation recovers circle normals") {
    const auto s = sample_circle(2.0, 256);
    const SpatialIndex index(s.cloud);
    const auto est = estimate_all_normals(s.cloud, index);
    const auto truth = normals_from_rows(s.cloud, s.normals);
    REQUIRE(est.size() == 256);
    for (std::size_t i = 0; i < est.size(); ++i) {
        CHECK(est[i].point_id == i);
        CHECK(principal_angle(est[i].normal_basis, truth[i].normal_basis) <
              0.05);
        CHECK(est[i].witness_ids.size() == 2);  // p plus one edge vertex
    }
}

TEST_CASE("tangent estimation error shrinks with density (sphere)") {
    double med[2];
    std::size_t idx = 0;
    for (std::size_t n : {600UL, 2400UL}) {
        const auto s = sample_sphere(1.0, n);
        const SpatialIndex index(s.cloud);
        const auto est = estimate_all_normals(s.cloud, index);
        const auto truth = normals_from_rows(s.cloud, s.normals);
        std::vector<double> err;
        for (std::size_t i = 0; i < est.size(); ++i)
            err.push_back(principal_angle(est[i].normal_basis,
                                          truth[i].normal_basis));
        std::nth_element(err.begin(), err.begin() + err.size() / 2,
                         err.end());
        med[idx++] = err[err.size() / 2];
    }
    CHECK(med[1] < med[0]);
}

TEST_CASE("tangent estimation error codes") {
    PointCloud tiny(3, 2);
    tiny.add_point(std::vector<double>{0, 0, 0});
    tiny.add_point(std::vector<double>{1, 0, 0});
    const SpatialIndex index(tiny);
    try {
        static_cast<void>(estimate_tangent_basis(tiny, index, 0));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InsufficientCandidates);
    }

    // Collinear cloud with declared intrinsic dimension 2: no second
    // independent direction exists inside the angle window.
    PointCloud line(3, 2);
    for (int i = 0; i < 6; ++i)
        line.add_point(std::vector<double>{static_cast<double>(i), 0, 0});
    const SpatialIndex lindex(line);
    CHECK_THROWS_AS(static_cast<void>(estimate_tangent_basis(line, lindex, 0)),
                    Error);
}

TEST_CASE("supplied normal rows are validated") {
    PointCloud cloud(2, 1);
    cloud.add_point(std::vector<double>{0, 0});
    cloud.add_point(std::vector<double>{1, 0});
    CHECK_THROWS_AS(
        static_cast<void>(normals_from_rows(
            cloud, std::vector<std::vector<double>>{{0, 1}})),
        Error);  // wrong row count
    CHECK_THROWS_AS(
        static_cast<void>(normals_from_rows(
            cloud, std::vector<std::vector<double>>{{0, 1, 7}, {0, 1}})),
        Error);  // wrong row width
    PointCloud full(2, 2);
    full.add_point(std::vector<double>{0, 0});
    CHECK_THROWS_AS(static_cast<void>(normals_from_rows(
                        full, std::vector<std::vector<double>>{{}})),
                    Error);  // no normal space
}

TEST_CASE("greedy sparsifier on a line with constant feature size") {
    // Points 0..9 spaced 1 apart, lnfs = 2, rho = 1: the greedy pass keeps
    // 0 (ties break to the smallest id), deletes 1 and 2, keeps 3, ... so
    // exactly {0, 3, 6, 9} survive.
    PointCloud cloud(2, 1);
    for (int i = 0; i < 10; ++i)
        cloud.add_point(std::vector<double>{static_cast<double>(i), 0.0});
    const std::vector<double> lnfs(10, 2.0);
    const SparseSample sample = lean_sparsify(cloud, lnfs, 1.0);
    CHECK(sample.retained == std::vector<std::size_t>{0, 3, 6, 9});
    CHECK(sample.deleted_by[1] == 0);
    CHECK(sample.deleted_by[2] == 0);
    CHECK(sample.deleted_by[4] == 3);
    CHECK(sample.is_retained(6));
    CHECK_FALSE(sample.is_retained(7));

    const UniformityReport rep = verify_uniformity(sample, cloud, lnfs);
    CHECK(rep.pass());
    CHECK(rep.sparsity_violations.empty());
    CHECK(rep.coverage_violations.empty());
    CHECK(rep.coverage_factor == doctest::Approx(1.2));
}

TEST_CASE("sparsifier prioritizes large feature size") {
    // Two clusters; the point with the largest lnfs is extracted first.
    PointCloud cloud(2, 1);
    cloud.add_point(std::vector<double>{0, 0});
    cloud.add_point(std::vector<double>{0.1, 0});
    cloud.add_point(std::vector<double>{5, 0});
    cloud.add_point(std::vector<double>{5.1, 0});
    const std::vector<double> lnfs{1.0, 1.0, 3.0, 1.0};
    const SparseSample sample = lean_sparsify(cloud, lnfs, 0.5);
    CHECK(sample.retained.front() == 2);   // highest priority first
    CHECK(sample.deleted_by[3] == 2);      // within 0.5 * 3
    CHECK(sample.deleted_by[1] == 0);
}

TEST_CASE("sparsifier input validation") {
    PointCloud cloud(2, 1);
    cloud.add_point(std::vector<double>{0, 0});
    cloud.add_point(std::vector<double>{1, 0});
    try {
        static_cast<void>(lean_sparsify(cloud, {1.0}, 0.5));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingLnfs);
    }
    CHECK_THROWS_AS(
        static_cast<void>(lean_sparsify(
            cloud, {1.0, std::numeric_limits<double>::quiet_NaN()}, 0.5)),
        Error);
}

TEST_CASE("uniformity checker flags violations") {
    PointCloud cloud(2, 1);
    cloud.add_point(std::vector<double>{0, 0});
    cloud.add_point(std::vector<double>{1, 0});
    cloud.add_point(std::vector<double>{10, 0});
    const std::vector<double> lnfs(3, 4.0);

    // Hand-built bad sample: retains two points closer than rho * lnfs
    // and leaves the far point uncovered.
    SparseSample bad;
    bad.rho = 1.0;
    bad.lnfs_of = lnfs;
    bad.retained = {0, 1};
    bad.deleted_by = {SparseSample::kSelf, SparseSample::kSelf, 0};
    const UniformityReport rep = verify_uniformity(bad, cloud, lnfs);
    CHECK_FALSE(rep.sparsity_ok);
    CHECK_FALSE(rep.coverage_ok);
    CHECK(rep.sparsity_violations.size() == 1);
    CHECK(rep.coverage_violations == std::vector<std::size_t>{2});
}
