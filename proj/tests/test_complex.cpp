// Scale-graph flag complex construction and Z2 persistence, checked
// against a standard Vietoris-Rips builder and dense linear algebra.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "leantopo/adaptive_complex.hpp"
#include "leantopo/homology_z2.hpp"
#include "oracles.hpp"

using namespace leantopo;

namespace {

// Complex over a cloud with random per-point scales and two random levels.
FilteredCliqueComplex random_two_level_complex(std::uint64_t seed,
                                               std::size_t n, int max_dim) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const PointCloud cloud = oracle::random_cloud(n, 3, seed ^ 0x5bd1e995);
    std::vector<double> scales(cloud.size());
    for (double& s : scales) s = 0.1 + 0.4 * u(rng);
    double lo = 0.3 + 0.5 * u(rng);
    double hi = lo + 0.7 * u(rng);
    return build_scale_complex(cloud, scales, lo, hi, max_dim);
}

}  // namespace

TEST_CASE("edge scale definition and errors") {
    PointCloud cloud(2, 1);
    cloud.add_point(std::vector<double>{0, 0});
    cloud.add_point(std::vector<double>{3, 0});
    CHECK(edge_scale(0, 1, cloud, {1.0, 2.0}) == doctest::Approx(1.0));
    CHECK(edge_scale(0, 1, cloud, {0.5, 0.5}) == doctest::Approx(3.0));
    try {
        static_cast<void>(edge_scale(0, 1, cloud, {0.0, 1.0}));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroLnfs);
    }
}

TEST_CASE("constant scales degenerate to a standard Rips complex") {
    // With every scale equal to c, the edge rule d <= alpha * 2c is the
    // Rips rule at threshold 2 * alpha * c: same simplices, and
    // filtration values off by exactly the 2c factor.
    for (std::uint64_t seed : {10ULL, 11ULL, 12ULL}) {
        const PointCloud cloud = oracle::random_cloud(40, 2, seed);
        const double c = 0.35, alpha = 0.4;
        const std::vector<double> scales(cloud.size(), c);
        const auto adaptive =
            build_scale_complex(cloud, scales, alpha, alpha, 3);
        const auto rips =
            oracle::rips_simplices(cloud, 2.0 * alpha * c, 3);
        CHECK(oracle::simplex_set(adaptive.simplices) ==
              oracle::simplex_set(rips));
    }
}

TEST_CASE("simplices arrive in filtration-compatible order") {
    const auto complex = random_two_level_complex(77, 30, 3);
    REQUIRE(!complex.simplices.empty());
    std::set<std::vector<std::uint32_t>> seen;
    double prev = -1.0;
    for (const auto& s : complex.simplices) {
        CHECK(s.filtration >= prev - 0.0);
        prev = std::max(prev, s.filtration);
        CHECK(std::is_sorted(s.vertices.begin(), s.vertices.end()));
        // every facet must already be present
        if (s.dim() > 0) {
            for (std::size_t skip = 0; skip < s.vertices.size(); ++skip) {
                std::vector<std::uint32_t> face;
                for (std::size_t t = 0; t < s.vertices.size(); ++t)
                    if (t != skip) face.push_back(s.vertices[t]);
                CHECK(seen.count(face) == 1);
            }
        }
        seen.insert(s.vertices);
    }
    CHECK(seen.size() == complex.simplices.size());  // no duplicates
}

TEST_CASE("simplex cap raises the dedicated error") {
    const PointCloud cloud = oracle::random_cloud(60, 2, 5);
    const std::vector<double> scales(cloud.size(), 10.0);  // complete graph
    try {
        static_cast<void>(build_scale_complex(cloud, scales, 1.0, 1.0, 3, 500));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ComplexTooLarge);
    }
}

TEST_CASE("boundary of boundary vanishes over Z2") {
    for (std::uint64_t seed : {21ULL, 22ULL}) {
        const auto complex = random_two_level_complex(seed, 25, 3);
        const BoundaryMatrix bm = boundary_matrix(complex);
        REQUIRE(bm.columns.size() == complex.simplices.size());
        for (std::size_t j = 0; j < bm.columns.size(); ++j) {
            // XOR of the boundaries of the faces must be empty.
            std::set<std::size_t> acc;
            for (std::size_t f : bm.columns[j]) {
                for (std::size_t g : bm.columns[f]) {
                    auto [it, inserted] = acc.insert(g);
                    if (!inserted) acc.erase(it);
                }
            }
            CHECK(acc.empty());
            for (std::size_t f : bm.columns[j]) {
                CHECK(f < j);  // faces strictly precede cofaces
                CHECK(bm.dims[f] == bm.dims[j] - 1);
            }
        }
    }
}

TEST_CASE("Betti numbers of hand-built complexes") {
    // Hollow square (4-cycle): one component, one loop.
    PointCloud square(2, 1);
    square.add_point(std::vector<double>{0, 0});
    square.add_point(std::vector<double>{1, 0});
    square.add_point(std::vector<double>{1, 1});
    square.add_point(std::vector<double>{0, 1});
    // scale 0.5 each: edges exist iff d <= alpha; alpha = 1 connects the
    // sides (length 1) but not the diagonals (sqrt 2).
    const auto cycle =
        build_scale_complex(square, std::vector<double>(4, 0.5), 1.0, 1.0, 2);
    CHECK(betti_numbers(cycle, 1) == std::vector<std::size_t>{1, 1});

    // alpha = 1.5 fills the diagonals and all triangles: a disk.
    const auto disk =
        build_scale_complex(square, std::vector<double>(4, 0.5), 1.5, 1.5, 2);
    CHECK(betti_numbers(disk, 1) == std::vector<std::size_t>{1, 0});

    // Octahedron boundary: a topological 2-sphere.
    PointCloud oct(3, 2);
    for (double s : {1.0, -1.0}) {
        oct.add_point(std::vector<double>{s, 0, 0});
        oct.add_point(std::vector<double>{0, s, 0});
        oct.add_point(std::vector<double>{0, 0, s});
    }
    // adjacent vertices at sqrt(2), antipodal at 2: threshold between.
    const auto sphere = build_scale_complex(
        oct, std::vector<double>(6, 0.5), 1.6, 1.6, 3);
    CHECK(betti_numbers(sphere, 2) == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("Betti numbers match dense Z2 linear algebra on random complexes") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto complex = random_two_level_complex(seed, 12, 3);
        const auto got = betti_numbers(complex, 2);
        const auto snap = oracle::snapshot_at(complex, complex.alpha_hi);
        for (int d = 0; d <= 2; ++d)
            CHECK(got[d] == oracle::betti_linear(snap, d));
        CHECK(oracle::euler_from_counts(snap) ==
              oracle::euler_from_betti(snap));
    }
}

TEST_CASE("two-level image rank matches the subspace-intersection oracle") {
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        const auto complex = random_two_level_complex(seed, 12, 3);
        const auto result = persistent_image_rank(complex, 2);
        for (int d = 0; d <= 2; ++d) {
            CHECK(result.image_rank[d] ==
                  oracle::image_rank_linear(complex, d));
        }
        // Interval bookkeeping: births never exceed deaths.
        for (const auto& iv : result.barcode)
            CHECK(iv.birth <= (iv.essential() ? iv.birth : iv.death));
    }
}

TEST_CASE("persistence of a filtered 4-cycle") {
    // Vertices enter at 0; edges at 1; the square gets filled by
    // diagonals + triangles at 2. With levels (1, 2) the loop class is
    // born at 1 and dies at 2, so it does not survive the inclusion.
    PointCloud square(2, 1);
    square.add_point(std::vector<double>{0, 0});
    square.add_point(std::vector<double>{1, 0});
    square.add_point(std::vector<double>{1, 1});
    square.add_point(std::vector<double>{0, 1});
    const auto complex = build_scale_complex(
        square, std::vector<double>(4, 0.5), 1.0, std::sqrt(2.0), 2);
    const auto result = persistent_image_rank(complex, 1);
    CHECK(result.betti_lo == std::vector<std::size_t>{1, 1});
    CHECK(result.betti_hi == std::vector<std::size_t>{1, 0});
    CHECK(result.image_rank == std::vector<std::size_t>{1, 0});

    // The dim-1 interval [1, sqrt 2) must appear in the barcode.
    bool found = false;
    for (const auto& iv : result.barcode)
        if (iv.dim == 1 && iv.birth == doctest::Approx(1.0) &&
            !iv.essential() && iv.death == doctest::Approx(std::sqrt(2.0)))
            found = true;
    CHECK(found);
}

TEST_CASE("two-scale pipeline complex only keeps retained vertices") {
    const PointCloud cloud = oracle::random_cloud(30, 2, 3);
    std::vector<double> lnfs(cloud.size(), 0.2);
    SparseSample sample;
    sample.rho = 0.5;
    sample.lnfs_of = lnfs;
    sample.deleted_by.assign(cloud.size(), 0);
    for (std::size_t i = 0; i < cloud.size(); i += 2) {
        sample.retained.push_back(i);
        sample.deleted_by[i] = SparseSample::kSelf;
    }
    const auto complex = build_two_scale_complex(sample, cloud, 0.5, 1.0, 2);
    CHECK(complex.vertex_count == sample.retained.size());
    REQUIRE(complex.vertex_labels.size() == sample.retained.size());
    for (std::size_t lbl : complex.vertex_labels)
        CHECK(lbl % 2 == 0);
    CHECK(complex.alpha_lo == doctest::Approx(0.5));
    CHECK(complex.alpha_hi == doctest::Approx(1.0));
}
