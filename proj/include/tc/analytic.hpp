// Closed-form singly-excited Tavis-Cummings dynamics with linear cost in N.
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "tc/params.hpp"

namespace tc {

// Complex splitting constant D with D^2 = kappa^2 - 16 N g^2; purely
// imaginary in the strong-coupling regime, where the polariton peaks are
// separated by 2 g sqrt(N) = |D|/2.
struct SplittingConstant {
    std::complex<double> value;
};

// Atomic amplitudes c_n(t). The squared norm may be below one; the missing
// weight has leaked to the cavity/environment.
struct CoefficientVector {
    double t = 0.0;
    Eigen::VectorXd values;
};

// Diagonal of the reduced density matrix: per-atom excited-state
// probabilities plus the aggregated ground/photon weight.
struct PopulationVector {
    double t = 0.0;
    Eigen::VectorXd atom_populations;
    double ground_population = 0.0;
};

namespace analytic {

SplittingConstant splitting_constant(const TCParams& params);

// Scalar bright-mode envelope
//   E(t) = exp(-kappa t/4) (cosh(D t/4) + (kappa/D) sinh(D t/4)),
// evaluated uniformly in complex arithmetic (no trig/hyperbolic branch
// split; the imaginary residue is checked and discarded). Near D = 0 the
// closed form is 0/0 and a real series in (D t/4)^2 takes over.
double envelope(const TCParams& params, double t);

// c_n(t) = c_n(0) - (B0/N)(1 - E(t)) with B0 = sum_m c_m(0). The dark
// component c_n(0) - B0/N never moves; only the bright mode evolves.
CoefficientVector coefficients(const TCParams& params, double t);

// Excited-state probabilities c_n(t)^2 and ground weight 1 - sum.
PopulationVector populations(const TCParams& params, double t);

// t -> infinity limit c_n(0) - B0/N (the trapped dark-state residue).
// Requires g > 0 and kappa > 0, otherwise the envelope does not decay.
CoefficientVector steady_state_coefficients(const TCParams& params);

// Squares a coefficient vector into a PopulationVector.
PopulationVector populations_from_coefficients(const CoefficientVector& coeffs);

// Diagonal of the collective spin-z operator over N qubits, expressed via
// Hamming weights: entry p (0-based) equals N/2 - popcount(p). Guarded to
// N <= 20; this is a verification utility, not a production path.
Eigen::VectorXd hamming_level_diag(int n_atoms);

}  // namespace analytic
}  // namespace tc
