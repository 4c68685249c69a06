#include "tc/params.hpp"

#include <cmath>
#include <stdexcept>

namespace tc {

TCParams TCParams::atom1_excited(int n_atoms, double g, double kappa) {
    TCParams params;
    params.n_atoms = n_atoms;
    params.g = g;
    params.kappa = kappa;
    if (n_atoms >= 1) {
        params.initial_coeffs = Eigen::VectorXd::Zero(n_atoms);
        params.initial_coeffs[0] = 1.0;
    }
    params.validate();
    return params;
}

double TCParams::collective_rate() const {
    return g * std::sqrt(static_cast<double>(n_atoms));
}

void TCParams::validate() const {
    if (n_atoms < 1) {
        throw std::invalid_argument("TCParams: n_atoms must be >= 1");
    }
    if (!(g >= 0.0) || !std::isfinite(g)) {
        throw std::invalid_argument("TCParams: g must be finite and >= 0");
    }
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
        throw std::invalid_argument("TCParams: kappa must be finite and >= 0");
    }
    if (initial_coeffs.size() != n_atoms) {
        throw std::invalid_argument("TCParams: initial_coeffs must have length n_atoms");
    }
    if (!initial_coeffs.allFinite()) {
        throw std::invalid_argument("TCParams: initial_coeffs must be finite");
    }
    const double norm2 = initial_coeffs.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("TCParams: initial coefficients must be unit-normalized");
    }
}

CouplingRegime coupling_regime(const TCParams& params) {
    params.validate();
    const double rate = params.collective_rate();
    const CouplingClass regime =
        rate < params.kappa / 4.0 ? CouplingClass::weak : CouplingClass::strong;
    return {regime, rate};
}

}  // namespace tc
