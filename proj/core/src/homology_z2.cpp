#include "leantopo/homology_z2.hpp"

#include <algorithm>
#include <unordered_map>

namespace leantopo {

namespace {

struct VertexListHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (std::uint32_t x : v)
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Symmetric difference of two sorted index lists (Z2 column addition).
void add_column(std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    a = std::move(out);
}

struct Reduction {
    // paired[i] = column that kills simplex i, or npos.
    std::vector<std::size_t> killer;
    // is_cycle[j]: column j reduced to zero.
    std::vector<bool> is_cycle;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

Reduction reduce(BoundaryMatrix& bm) {
    const std::size_t n = bm.columns.size();
    Reduction red;
    red.killer.assign(n, Reduction::npos);
    red.is_cycle.assign(n, false);

    int max_dim = 0;
    for (int d : bm.dims) max_dim = std::max(max_dim, d);

    std::vector<std::size_t> pivot_owner(n, Reduction::npos);
    std::vector<bool> cleared(n, false);

    // Top dimension first so pivots can clear lower-dimensional columns.
    for (int d = max_dim; d >= 0; --d) {
        for (std::size_t j = 0; j < n; ++j) {
            if (bm.dims[j] != d) continue;
            if (cleared[j]) {
                red.is_cycle[j] = true;
                bm.columns[j].clear();
                continue;
            }
            auto& col = bm.columns[j];
            while (!col.empty()) {
                const std::size_t piv = col.back();
                const std::size_t owner = pivot_owner[piv];
                if (owner == Reduction::npos) break;
                add_column(col, bm.columns[owner]);
            }
            if (col.empty()) {
                red.is_cycle[j] = true;
            } else {
                const std::size_t piv = col.back();
                pivot_owner[piv] = j;
                red.killer[piv] = j;
                cleared[piv] = true;
            }
        }
    }
    return red;
}

std::vector<Interval> intervals_from(const BoundaryMatrix& bm,
                                     const Reduction& red, int top_dim) {
    std::vector<Interval> out;
    const std::size_t n = bm.columns.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!red.is_cycle[i]) continue;
        if (bm.dims[i] > top_dim) continue;
        const double birth = bm.filtrations[i];
        const double death =
            red.killer[i] == Reduction::npos
                ? std::numeric_limits<double>::infinity()
                : bm.filtrations[red.killer[i]];
        out.push_back({bm.dims[i], birth, death});
    }
    return out;
}

}  // namespace

BoundaryMatrix boundary_matrix(const FilteredCliqueComplex& complex) {
    const auto& simplices = complex.simplices;
    std::unordered_map<std::vector<std::uint32_t>, std::size_t, VertexListHash>
        index_of;
    index_of.reserve(simplices.size());
    for (std::size_t j = 0; j < simplices.size(); ++j)
        index_of.emplace(simplices[j].vertices, j);

    BoundaryMatrix bm;
    bm.columns.resize(simplices.size());
    bm.dims.resize(simplices.size());
    bm.filtrations.resize(simplices.size());
    std::vector<std::uint32_t> face;
    for (std::size_t j = 0; j < simplices.size(); ++j) {
        const auto& s = simplices[j];
        bm.dims[j] = s.dim();
        bm.filtrations[j] = s.filtration;
        if (s.dim() == 0) continue;
        auto& col = bm.columns[j];
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            face.clear();
            for (std::size_t t = 0; t < s.vertices.size(); ++t)
                if (t != drop) face.push_back(s.vertices[t]);
            auto it = index_of.find(face);
            if (it == index_of.end())
                throw Error(ErrorCode::MissingFace,
                            "complex is not closed under faces");
            if (it->second >= j)
                throw Error(ErrorCode::MissingFace,
                            "face ordered after its coface");
            col.push_back(it->second);
        }
        std::sort(col.begin(), col.end());
    }
    return bm;
}

std::vector<std::size_t> betti_numbers(const FilteredCliqueComplex& complex,
                                       int top_dim) {
    BoundaryMatrix bm = boundary_matrix(complex);
    const Reduction red = reduce(bm);
    std::vector<std::size_t> betti(top_dim + 1, 0);
    for (const auto& iv : intervals_from(bm, red, top_dim))
        if (iv.essential()) ++betti[iv.dim];
    return betti;
}

ImageRankResult persistent_image_rank(const FilteredCliqueComplex& complex,
                                      int top_dim) {
    BoundaryMatrix bm = boundary_matrix(complex);
    const Reduction red = reduce(bm);

    ImageRankResult res;
    res.image_rank.assign(top_dim + 1, 0);
    res.betti_lo.assign(top_dim + 1, 0);
    res.betti_hi.assign(top_dim + 1, 0);
    res.barcode = intervals_from(bm, red, top_dim);

    for (const auto& iv : res.barcode) {
        if (iv.dim > top_dim) continue;
        if (iv.birth <= complex.alpha_lo && iv.death > complex.alpha_lo)
            ++res.betti_lo[iv.dim];
        if (iv.birth <= complex.alpha_hi && iv.death > complex.alpha_hi)
            ++res.betti_hi[iv.dim];
        if (iv.birth <= complex.alpha_lo && iv.death > complex.alpha_hi)
            ++res.image_rank[iv.dim];
    }
    return res;
}

}  // namespace leantopo
