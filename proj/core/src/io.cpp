#include "leantopo/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace leantopo {

PointCloud read_point_text(std::istream& in, int intrinsic_dim) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int cols = -1;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ss(line);
        std::vector<double> row;
        double v;
        while (ss >> v) row.push_back(v);
        if (row.empty()) continue;
        if (cols == -1) cols = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != cols)
            throw Error(ErrorCode::BadInput,
                        "inconsistent column count at line " +
                            std::to_string(lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw Error(ErrorCode::EmptyCloud, "no points in input");
    PointCloud cloud(cols, intrinsic_dim);
    cloud.add_points(rows);
    return cloud;
}

PointCloud read_point_file(const std::string& path, int intrinsic_dim) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::BadInput, "cannot open point file: " + path);
    return read_point_text(in, intrinsic_dim);
}

void write_point_text(std::ostream& out, const PointCloud& cloud) {
    out << std::setprecision(17);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(i);
        for (std::size_t d = 0; d < p.size(); ++d)
            out << (d ? " " : "") << p[d];
        out << "\n";
    }
}

void write_point_file(const std::string& path, const PointCloud& cloud) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::BadInput, "cannot open output file: " + path);
    write_point_text(out, cloud);
}

void write_lean_set(std::ostream& out, const LeanSet& lean) {
    out << std::setprecision(17);
    for (const auto& lp : lean.points) {
        for (double c : lp.midpoint) out << c << " ";
        out << lp.pair_first << " " << lp.pair_second << " "
            << lp.pair_distance << "\n";
    }
}

void write_sparse_sample(std::ostream& out, const SparseSample& sample,
                         const PointCloud& cloud) {
    out << std::setprecision(17);
    for (std::size_t q : sample.retained) {
        auto p = cloud.point(q);
        for (double c : p) out << c << " ";
        out << sample.lnfs_of[q] << "\n";
    }
}

void write_deletion_audit(std::ostream& out, const SparseSample& sample) {
    for (std::size_t p = 0; p < sample.deleted_by.size(); ++p)
        if (!sample.is_retained(p))
            out << p << " " << sample.deleted_by[p] << "\n";
}

void write_barcode(std::ostream& out, const std::vector<Interval>& barcode) {
    out << std::setprecision(17);
    for (const auto& iv : barcode) {
        out << iv.dim << " " << iv.birth << " ";
        if (iv.essential())
            out << "inf\n";
        else
            out << iv.death << "\n";
    }
}

void write_complex(std::ostream& out, const FilteredCliqueComplex& complex) {
    out << std::setprecision(17);
    for (const auto& s : complex.simplices) {
        out << s.dim();
        for (auto v : s.vertices) out << " " << v;
        out << " " << s.filtration << "\n";
    }
}

void write_normals(std::ostream& out,
                   const std::vector<TangentEstimate>& estimates) {
    out << std::setprecision(17);
    for (const auto& e : estimates) {
        out << e.point_id;
        const auto& m = e.normal_basis.matrix();
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i) out << " " << m(i, j);
        out << "\n";
    }
}

std::vector<std::vector<double>> read_normals(std::istream& in,
                                              std::size_t n_points,
                                              int ambient_dim, int normal_dim) {
    const std::size_t want = static_cast<std::size_t>(ambient_dim) * normal_dim;
    std::vector<std::vector<double>> rows(n_points);
    std::vector<bool> seen(n_points, false);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::size_t id;
        if (!(ss >> id)) continue;
        if (id >= n_points)
            throw Error(ErrorCode::BadInput,
                        "normal row id out of range at line " +
                            std::to_string(lineno));
        if (seen[id])
            throw Error(ErrorCode::BadInput,
                        "duplicate normal row for point " + std::to_string(id));
        std::vector<double> row;
        double v;
        while (ss >> v) row.push_back(v);
        if (row.size() != want)
            throw Error(ErrorCode::BadInput,
                        "normal row at line " + std::to_string(lineno) +
                            " must hold " + std::to_string(want) +
                            " coordinates");
        rows[id] = std::move(row);
        seen[id] = true;
    }
    for (std::size_t p = 0; p < n_points; ++p)
        if (!seen[p])
            throw Error(ErrorCode::BadInput,
                        "missing normal row for point " + std::to_string(p));
    return rows;
}

std::vector<std::vector<double>> read_normals_file(const std::string& path,
                                                   std::size_t n_points,
                                                   int ambient_dim,
                                                   int normal_dim) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::BadInput, "cannot open normals file: " + path);
    return read_normals(in, n_points, ambient_dim, normal_dim);
}

}  // namespace leantopo
