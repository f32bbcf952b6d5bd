#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gtcat/errors.hpp"

namespace gtcat {

struct EigenCluster {
    double eigenvalue = 0;      // cluster mean
    Eigen::MatrixXcd basis;     // orthonormal columns spanning the cluster space
};

/// Eigendecomposition of a Hermitian matrix with eigenvalues clustered by
/// gap: consecutive sorted eigenvalues closer than cluster_gap are merged.
/// Throws DomainError if ||A - A^dagger||_inf > tol. The reconstruction
/// sum(lambda_i P_i) is verified to within 100*tol.
std::vector<EigenCluster> eigensplit_hermitian(const Eigen::MatrixXcd& A,
                                               double tol = 1e-9,
                                               double cluster_gap = 1e-6);

} // namespace gtcat
