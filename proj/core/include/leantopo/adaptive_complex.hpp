#ifndef LEANTOPO_ADAPTIVE_COMPLEX_HPP
#define LEANTOPO_ADAPTIVE_COMPLEX_HPP

#include <cstdint>
#include <vector>

#include "leantopo/point_cloud.hpp"
#include "leantopo/sparsifier.hpp"

namespace leantopo {

/// One simplex of the flag complex, tagged with its filtration value.
struct Simplex {
    std::vector<std::uint32_t> vertices;  // sorted local vertex ids
    double filtration = 0.0;              // max edge scale; 0 for vertices

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

/**
 * Flag complex over the scale graph: an edge pq is present when
 * d(p,q) / (lnfs(p) + lnfs(q)) <= alpha_hi, and every clique up to max_dim
 * is filled in. Two marked levels alpha_lo < alpha_hi drive the
 * image-rank computation downstream.
 *
 * Simplices are sorted by (filtration, dimension, lexicographic vertices),
 * which is filtration-compatible: every face precedes its cofaces.
 */
struct FilteredCliqueComplex {
    double alpha_lo = 0.0;
    double alpha_hi = 0.0;
    int max_dim = 1;
    std::size_t vertex_count = 0;
    std::vector<Simplex> simplices;

    // Maps local vertex id -> original point id (identity when built
    // directly over a cloud).
    std::vector<std::size_t> vertex_labels;
};

// Scale value of the edge pq: d(p,q) / (lnfs(p) + lnfs(q)).
double edge_scale(std::size_t p, std::size_t q, const PointCloud& cloud,
                  const std::vector<double>& lnfs_of);

inline constexpr std::size_t kDefaultSimplexCap = 50'000'000;

// Builds the two-level complex over the retained points of a sparse sample.
FilteredCliqueComplex build_two_scale_complex(
    const SparseSample& sample, const PointCloud& cloud, double alpha_lo,
    double alpha_hi, int max_dim, std::size_t simplex_cap = kDefaultSimplexCap);

// Same construction from explicit per-point scales; used when every input
// point participates (no sparsification step).
FilteredCliqueComplex build_scale_complex(const PointCloud& cloud,
                                          const std::vector<double>& lnfs_of,
                                          double alpha_lo, double alpha_hi,
                                          int max_dim,
                                          std::size_t simplex_cap =
                                              kDefaultSimplexCap);

}  // namespace leantopo

#endif
