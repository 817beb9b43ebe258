#ifndef LEANTOPO_HOMOLOGY_Z2_HPP
#define LEANTOPO_HOMOLOGY_Z2_HPP

#include <limits>
#include <vector>

#include "leantopo/adaptive_complex.hpp"

namespace leantopo {

/**
 * Sparse Z2 boundary matrix in filtration order. Column j lists the row
 * indices (sorted) of the codimension-1 faces of simplex j; coefficients
 * are implicit.
 */
struct BoundaryMatrix {
    std::vector<std::vector<std::size_t>> columns;
    std::vector<int> dims;            // dimension of simplex j
    std::vector<double> filtrations;  // filtration value of simplex j
};

BoundaryMatrix boundary_matrix(const FilteredCliqueComplex& complex);

/// One persistence interval in a fixed dimension.
struct Interval {
    int dim;
    double birth;
    double death;  // +inf for essential classes

    bool essential() const {
        return death == std::numeric_limits<double>::infinity();
    }
};

struct ImageRankResult {
    std::vector<std::size_t> image_rank;  // per dimension 0..top
    std::vector<std::size_t> betti_lo;    // Betti of the alpha_lo subcomplex
    std::vector<std::size_t> betti_hi;    // Betti of the alpha_hi complex
    std::vector<Interval> barcode;        // includes zero-length intervals
};

// Betti numbers over Z2 of the complex as stored, for i = 0..top_dim.
std::vector<std::size_t> betti_numbers(const FilteredCliqueComplex& complex,
                                       int top_dim);

// Standard column reduction over the full filtration (with the clearing
// optimization); the rank of H_i(K_lo) -> H_i(K_hi) is the number of
// dimension-i intervals with birth <= alpha_lo and death > alpha_hi.
ImageRankResult persistent_image_rank(const FilteredCliqueComplex& complex,
                                      int top_dim);

}  // namespace leantopo

#endif
