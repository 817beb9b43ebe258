#include "leantopo/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace leantopo {

SubspaceBasis SubspaceBasis::from_spanning_vectors(
    const Eigen::MatrixXd& vectors) {
    const int k = static_cast<int>(vectors.rows());
    const int m = static_cast<int>(vectors.cols());
    if (m < 1 || m > k)
        throw Error(ErrorCode::DimensionMismatch,
                    "need 1 <= #vectors <= ambient dimension");

    Eigen::MatrixXd q(k, m);
    for (int j = 0; j < m; ++j) {
        Eigen::VectorXd v = vectors.col(j);
        const double orig = v.norm();
        // Two projection passes keep the basis orthonormal to ~1e-15.
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < j; ++i) v -= q.col(i).dot(v) * q.col(i);
        if (orig == 0.0 || v.norm() < 1e-10 * orig)
            throw Error(ErrorCode::DimensionMismatch,
                        "spanning vectors are rank deficient");
        q.col(j) = v / v.norm();
    }
    return SubspaceBasis(std::move(q));
}

SubspaceBasis::SubspaceBasis(Eigen::MatrixXd orthonormal_columns)
    : basis_(std::move(orthonormal_columns)) {
    if (basis_.cols() < 1 || basis_.cols() > basis_.rows())
        throw Error(ErrorCode::DimensionMismatch, "bad basis shape");
    const Eigen::MatrixXd gram = basis_.transpose() * basis_;
    const double err =
        (gram - Eigen::MatrixXd::Identity(basis_.cols(), basis_.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (err > kOrthoTol)
        throw Error(ErrorCode::DimensionMismatch, "basis is not orthonormal");
}

SubspaceBasis SubspaceBasis::complement() const {
    const int k = ambient_dim();
    const int m = dim();
    if (m == k)
        throw Error(ErrorCode::DimensionMismatch,
                    "full-dimensional subspace has no complement basis");
    // Null space of B^T via full SVD.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis_.transpose(),
                                          Eigen::ComputeFullV);
    Eigen::MatrixXd comp = svd.matrixV().rightCols(k - m);
    return SubspaceBasis(std::move(comp));
}

double vector_subspace_angle(const Eigen::VectorXd& u,
                             const SubspaceBasis& basis) {
    if (u.size() != basis.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch,
                    "vector/basis ambient dimensions differ");
    const double n = u.norm();
    if (n == 0.0)
        throw Error(ErrorCode::ZeroVector,
                    "angle undefined for the zero vector");
    const double c =
        std::clamp((basis.matrix().transpose() * (u / n)).norm(), 0.0, 1.0);
    return std::acos(c);
}

double principal_angle(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch,
                    "ambient dimensions differ");
    if (a.dim() != b.dim())
        throw Error(ErrorCode::DimensionMismatch,
                    "principal-angle metric expects equal dimensions");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.matrix().transpose() * b.matrix());
    const double smallest = svd.singularValues().minCoeff();
    return std::acos(std::clamp(smallest, 0.0, 1.0));
}

}  // namespace leantopo
