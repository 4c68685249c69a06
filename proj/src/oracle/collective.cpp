#include "tc/oracle/collective.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "tc/errors.hpp"

namespace tc::oracle {
namespace {

Eigen::SparseMatrix<double> sparse2x2(double a00, double a01, double a10, double a11) {
    Eigen::SparseMatrix<double> m(2, 2);
    if (a00 != 0.0) m.insert(0, 0) = a00;
    if (a01 != 0.0) m.insert(0, 1) = a01;
    if (a10 != 0.0) m.insert(1, 0) = a10;
    if (a11 != 0.0) m.insert(1, 1) = a11;
    m.makeCompressed();
    return m;
}

Eigen::SparseMatrix<double> sparse_identity(Eigen::Index dim) {
    Eigen::SparseMatrix<double> id(dim, dim);
    id.setIdentity();
    return id;
}

}  // namespace

CollectiveOperators collective_operators(int n_atoms) {
    if (n_atoms < 1 || n_atoms > 12) {
        throw SizeLimitExceeded("collective_operators: n_atoms must be in [1, 12]");
    }

    // Basis per spin: |0> = up (+1/2), |1> = down (-1/2); sigma+ = |0><1|.
    const auto half_sigma_z = sparse2x2(0.5, 0.0, 0.0, -0.5);
    const auto sigma_plus = sparse2x2(0.0, 1.0, 0.0, 0.0);
    const auto id2 = sparse_identity(2);

    CollectiveOperators ops;
    ops.sz = half_sigma_z;
    ops.splus = sigma_plus;
    for (int j = 2; j <= n_atoms; ++j) {
        const Eigen::Index dim = Eigen::Index{1} << (j - 1);
        const auto id_prev = sparse_identity(dim);
        ops.sz = Eigen::kroneckerProduct(ops.sz, id2).eval() +
                 Eigen::kroneckerProduct(id_prev, half_sigma_z).eval();
        ops.splus = Eigen::kroneckerProduct(ops.splus, id2).eval() +
                    Eigen::kroneckerProduct(id_prev, sigma_plus).eval();
    }
    ops.sminus = ops.splus.transpose();
    return ops;
}

}  // namespace tc::oracle
