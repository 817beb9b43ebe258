#include "leantopo/adaptive_complex.hpp"

#include <algorithm>
#include <string>

namespace leantopo {

double edge_scale(std::size_t p, std::size_t q, const PointCloud& cloud,
                  const std::vector<double>& lnfs_of) {
    if (p == q) throw Error(ErrorCode::BadInput, "edge needs distinct ids");
    const double lp = lnfs_of[p];
    const double lq = lnfs_of[q];
    if (!(lp > 0.0) || !(lq > 0.0))
        throw Error(ErrorCode::ZeroLnfs, "edge scale needs positive lnfs");
    return cloud.distance(p, q) / (lp + lq);
}

namespace {

struct Neighbor {
    std::uint32_t id;
    double scale;
};

// Depth-first flag expansion over the upper-adjacency lists.
void expand_clique(
    const std::vector<std::vector<Neighbor>>& upper,
    std::vector<std::uint32_t>& clique, const std::vector<Neighbor>& cands,
    double filtration, int max_dim, std::size_t cap,
    std::vector<Simplex>& out) {
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
        const Neighbor& cand = cands[ci];
        // Max over edges from cand to every clique member; the incoming
        // candidate list already carries the max against earlier members.
        const double f = std::max(filtration, cand.scale);
        clique.push_back(cand.id);
        if (out.size() >= cap)
            throw Error(ErrorCode::ComplexTooLarge,
                        "simplex cap exceeded at " + std::to_string(out.size()));
        out.push_back({clique, f});
        if (static_cast<int>(clique.size()) - 1 < max_dim) {
            // Intersect the remaining candidates with cand's uppers.
            std::vector<Neighbor> next;
            const auto& nb = upper[cand.id];
            std::size_t i = ci + 1, j = 0;
            while (i < cands.size() && j < nb.size()) {
                if (cands[i].id < nb[j].id) {
                    ++i;
                } else if (cands[i].id > nb[j].id) {
                    ++j;
                } else {
                    next.push_back(
                        {cands[i].id, std::max(cands[i].scale, nb[j].scale)});
                    ++i;
                    ++j;
                }
            }
            if (!next.empty())
                expand_clique(upper, clique, next, f, max_dim, cap, out);
        }
        clique.pop_back();
    }
}

FilteredCliqueComplex build_from_points(
    const PointCloud& cloud, const std::vector<std::size_t>& ids,
    const std::vector<double>& lnfs_of, double alpha_lo, double alpha_hi,
    int max_dim, std::size_t cap) {
    // alpha_lo == alpha_hi is allowed for single-level (Betti-only) runs.
    if (!(alpha_lo > 0.0) || alpha_lo > alpha_hi)
        throw Error(ErrorCode::OutOfRange,
                    "levels must satisfy 0 < alpha_lo <= alpha_hi");
    if (max_dim < 1)
        throw Error(ErrorCode::OutOfRange, "max_dim must be >= 1");

    const std::size_t m = ids.size();
    FilteredCliqueComplex cx;
    cx.alpha_lo = alpha_lo;
    cx.alpha_hi = alpha_hi;
    cx.max_dim = max_dim;
    cx.vertex_count = m;
    cx.vertex_labels = ids;

    for (std::uint32_t v = 0; v < m; ++v)
        cx.simplices.push_back({{v}, 0.0});

    // Upper adjacency: neighbors with larger local id, kept sorted.
    std::vector<std::vector<Neighbor>> upper(m);
    for (std::uint32_t a = 0; a + 1 < m; ++a) {
        for (std::uint32_t b = a + 1; b < m; ++b) {
            const double s = edge_scale(ids[a], ids[b], cloud, lnfs_of);
            if (s <= alpha_hi) upper[a].push_back({b, s});
        }
    }

    std::vector<std::uint32_t> clique;
    for (std::uint32_t v = 0; v < m; ++v) {
        clique.assign(1, v);
        if (!upper[v].empty())
            expand_clique(upper, clique, upper[v], 0.0, max_dim,
                          cap, cx.simplices);
    }

    std::sort(cx.simplices.begin(), cx.simplices.end(),
              [](const Simplex& a, const Simplex& b) {
                  if (a.filtration != b.filtration)
                      return a.filtration < b.filtration;
                  if (a.vertices.size() != b.vertices.size())
                      return a.vertices.size() < b.vertices.size();
                  return a.vertices < b.vertices;
              });
    return cx;
}

}  // namespace

FilteredCliqueComplex build_two_scale_complex(const SparseSample& sample,
                                              const PointCloud& cloud,
                                              double alpha_lo, double alpha_hi,
                                              int max_dim,
                                              std::size_t simplex_cap) {
    return build_from_points(cloud, sample.retained, sample.lnfs_of, alpha_lo,
                             alpha_hi, max_dim, simplex_cap);
}

FilteredCliqueComplex build_scale_complex(const PointCloud& cloud,
                                          const std::vector<double>& lnfs_of,
                                          double alpha_lo, double alpha_hi,
                                          int max_dim,
                                          std::size_t simplex_cap) {
    std::vector<std::size_t> ids(cloud.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return build_from_points(cloud, ids, lnfs_of, alpha_lo, alpha_hi, max_dim,
                             simplex_cap);
}

}  // namespace leantopo
