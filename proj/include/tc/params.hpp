// Physical configuration of the resonant open Tavis-Cummings system.
#pragma once

#include <Eigen/Dense>

namespace tc {

// N two-level atoms coupled at rate g to one lossy cavity mode with loss
// rate kappa, restricted to at most a single excitation. All rates are
// angular frequencies; times are their inverses. The initial atomic
// amplitudes are real (negative values are admitted) and unit-normalized.
struct TCParams {
    int n_atoms = 1;
    double g = 0.0;      // atom-cavity coupling rate, >= 0
    double kappa = 0.0;  // cavity loss rate, >= 0
    Eigen::VectorXd initial_coeffs;  // c_n(0), length n_atoms

    // Standard preparation: the excitation starts entirely on atom 1.
    static TCParams atom1_excited(int n_atoms, double g, double kappa);

    double collective_rate() const;  // g * sqrt(N)

    // Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

enum class CouplingClass { weak, strong };

struct CouplingRegime {
    CouplingClass regime;
    double collective_rate;  // g * sqrt(N)
};

// Strong coupling iff g * sqrt(N) >= kappa / 4. The boundary is set by the
// collective rate: an ensemble can classify as strong even when each atom
// individually sits at or below the single-atom threshold.
CouplingRegime coupling_regime(const TCParams& params);

}  // namespace tc
