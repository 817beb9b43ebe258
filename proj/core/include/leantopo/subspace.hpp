#ifndef LEANTOPO_SUBSPACE_HPP
#define LEANTOPO_SUBSPACE_HPP

#include <Eigen/Dense>

#include "leantopo/errors.hpp"

namespace leantopo {

/**
 * Orthonormal basis of an m-dimensional linear subspace of R^k, stored as
 * the columns of a k x m matrix.
 */
class SubspaceBasis {
  public:
    static constexpr double kOrthoTol = 1e-9;

    // Orthonormalizes the columns of `vectors` (stabilized Gram-Schmidt
    // with re-orthogonalization). Throws DimensionMismatch on rank
    // deficiency.
    static SubspaceBasis from_spanning_vectors(const Eigen::MatrixXd& vectors);

    // Wraps columns that are already orthonormal (checked).
    explicit SubspaceBasis(Eigen::MatrixXd orthonormal_columns);

    int ambient_dim() const { return static_cast<int>(basis_.rows()); }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Eigen::MatrixXd& matrix() const { return basis_; }

    // Orthogonal complement within R^k.
    SubspaceBasis complement() const;

  private:
    Eigen::MatrixXd basis_;
};

// Angle in [0, pi/2] between a nonzero vector and a subspace:
// arccos(|| proj of u-hat onto span(basis) ||).
double vector_subspace_angle(const Eigen::VectorXd& u, const SubspaceBasis& basis);

// Largest principal angle between two equal-dimension subspaces, computed
// from the singular values of A^T B. Used as the estimation-error metric.
double principal_angle(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace leantopo

#endif
