// Lindblad master-equation oracle on the closed vacuum + single-excitation
// subspace of N atoms and one lossy cavity mode.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tc/analytic.hpp"

namespace tc::oracle {

// Density matrix on the (N+2)-dimensional subspace. Basis order:
// index 0 = |vac> (all atoms ground, no photon), 1..N = |e_n, 0>,
// N+1 = |g, 1> (one cavity photon).
struct SubspaceState {
    Eigen::MatrixXcd rho;

    int n_atoms() const { return static_cast<int>(rho.rows()) - 2; }
};

struct IntegratorConfig {
    double dt = 1e-3;             // fixed RK4 step
    std::vector<double> t_grid;   // nondecreasing output times, first = 0
    bool convergence_check = true;  // halve dt over the first interval once

    // dt = 1e-3 / max(1, g sqrt(N), kappa): >= 1000 steps per fastest period.
    static IntegratorConfig with_default_dt(const TCParams& params,
                                            std::vector<double> t_grid);

    void validate() const;
};

// Pure initial state with amplitudes c_n(0) on the atom basis states.
SubspaceState initial_state(const TCParams& params);

// Action of the generator L(rho) = -i[H, rho] + C rho C+ - 1/2 {C+C, rho}
// with the resonant rotating-frame Hamiltonian
//   H = g sum_n (|e_n><ph| + |ph><e_n|)
// and collapse operator C = sqrt(kappa) |vac><ph|.
Eigen::MatrixXcd lindblad_rhs(const TCParams& params, const Eigen::MatrixXcd& rho);

// Fixed-step RK4 integration sampled at config.t_grid. Atom populations are
// the diagonal entries 1..N; ground_population = rho_vac + rho_ph. Throws
// StepTooLarge if the trace drifts beyond 1e-6 or the initial step-halving
// check disagrees.
std::vector<PopulationVector> qme_evolve(const TCParams& params,
                                         const IntegratorConfig& config);

}  // namespace tc::oracle
