#ifndef LEANTOPO_IO_HPP
#define LEANTOPO_IO_HPP

#include <iosfwd>
#include <string>

#include "leantopo/homology_z2.hpp"
#include "leantopo/lean_set.hpp"
#include "leantopo/point_cloud.hpp"
#include "leantopo/sparsifier.hpp"
#include "leantopo/tangent_estimation.hpp"

namespace leantopo {

// Reads whitespace- or comma-separated points, one per line; '#' lines are
// ignored. Column count fixes the ambient dimension.
PointCloud read_point_text(std::istream& in, int intrinsic_dim);
PointCloud read_point_file(const std::string& path, int intrinsic_dim);

void write_point_text(std::ostream& out, const PointCloud& cloud);
void write_point_file(const std::string& path, const PointCloud& cloud);

// One midpoint per line: k coordinates, the two pair ids, pair distance.
void write_lean_set(std::ostream& out, const LeanSet& lean);

// One retained point per line with its lnfs value; optional deletion audit.
void write_sparse_sample(std::ostream& out, const SparseSample& sample,
                         const PointCloud& cloud);
void write_deletion_audit(std::ostream& out, const SparseSample& sample);

// One interval per line: dimension, birth, death|inf.
void write_barcode(std::ostream& out, const std::vector<Interval>& barcode);

// One simplex per line: dimension, vertex ids, filtration value.
void write_complex(std::ostream& out, const FilteredCliqueComplex& complex);

// Point id followed by the (k - s) * k normal basis coordinates.
void write_normals(std::ostream& out,
                   const std::vector<TangentEstimate>& estimates);

// Inverse of write_normals: rows indexed by point id, each carrying the
// (k - s) * k normal coordinates, suitable for normals_from_rows.
std::vector<std::vector<double>> read_normals(std::istream& in,
                                              std::size_t n_points,
                                              int ambient_dim, int normal_dim);
std::vector<std::vector<double>> read_normals_file(const std::string& path,
                                                   std::size_t n_points,
                                                   int ambient_dim,
                                                   int normal_dim);

}  // namespace leantopo

#endif
