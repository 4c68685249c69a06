// Collective spin operators over the full 2^N space, built from Kronecker
// products. Verification utilities for the Hamming-weight level structure.
#pragma once

#include <Eigen/SparseCore>

namespace tc::oracle {

struct CollectiveOperators {
    Eigen::SparseMatrix<double> sz;      // S_z = sum_j sigma_z^j / 2
    Eigen::SparseMatrix<double> splus;   // S+ = sum_j sigma_+^j
    Eigen::SparseMatrix<double> sminus;  // S- = (S+)^T
};

// N <= 12 (sparse 2^N x 2^N matrices; exponential guard).
// diag(S_z) equals hamming_level_diag(N) exactly and [S_z, S+-] = +-S+-.
CollectiveOperators collective_operators(int n_atoms);

}  // namespace tc::oracle
