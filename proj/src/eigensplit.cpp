#include "gtcat/eigensplit.hpp"

#include <algorithm>

namespace gtcat {

std::vector<EigenCluster> eigensplit_hermitian(const Eigen::MatrixXcd& A,
                                               double tol, double cluster_gap) {
    require(A.rows() == A.cols(), "eigensplit needs a square matrix");
    require(tol > 0 && cluster_gap > 0, "tolerances must be positive");
    const double herm_defect = (A - A.adjoint()).cwiseAbs().maxCoeff();
    require(herm_defect <= tol, "matrix is not Hermitian within tolerance");

    const Eigen::MatrixXcd H = 0.5 * (A + A.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    ensure(es.info() == Eigen::Success, "Hermitian eigensolver failed");

    const Eigen::VectorXd vals = es.eigenvalues(); // ascending
    const Eigen::MatrixXcd vecs = es.eigenvectors();
    const int n = static_cast<int>(vals.size());

    std::vector<EigenCluster> out;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i < n && vals[i] - vals[i - 1] <= cluster_gap) continue;
        EigenCluster c;
        c.basis = vecs.middleCols(start, i - start);
        c.eigenvalue = vals.segment(start, i - start).mean();
        out.push_back(std::move(c));
        start = i;
    }

    // orthonormality and reconstruction checks
    Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& c : out) {
        const Eigen::MatrixXcd gram =
            c.basis.adjoint() * c.basis -
            Eigen::MatrixXcd::Identity(c.basis.cols(), c.basis.cols());
        ensure(gram.cwiseAbs().maxCoeff() <= 1e4 * tol,
               "eigensplit basis is not orthonormal");
        recon += c.eigenvalue * (c.basis * c.basis.adjoint());
    }
    ensure((recon - H).cwiseAbs().maxCoeff() <= std::max(100 * tol, cluster_gap),
           "eigensplit reconstruction residual too large");
    return out;
}

} // namespace gtcat
