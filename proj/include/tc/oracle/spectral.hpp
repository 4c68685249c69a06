// Lorentzian spectral density of the lossy cavity and the memory kernel it
// induces, with a direct-quadrature verification mode.
#pragma once

#include "tc/params.hpp"

namespace tc::oracle {

// Numerical controls for the kernel-based oracles.
struct KernelConfig {
    // Uniform time step of the memory-integral solver.
    double h = 2.5e-4;
    // Half-width of the detuning window for spectral quadrature;
    // 0 selects the default 8000 * kappa.
    double detuning_halfwidth = 0.0;
    // Re-solve at h/2 and reject if the two runs disagree grossly.
    bool self_check = true;

    void validate() const;
};

// J(delta) = (g^2 / 2pi) kappa / (delta^2 + (kappa/2)^2), the cavity
// response at detuning delta = omega_s - omega. Requires kappa > 0.
double spectral_density(const TCParams& params, double detuning);

// Closed form of the memory kernel f(tau) = g^2 exp(-kappa tau / 2)
// (the Fourier transform of the Lorentzian). Requires kappa > 0, tau >= 0.
double memory_kernel(const TCParams& params, double tau);

// Verification mode: oscillatory Simpson quadrature of the defining
// integral f(tau) = integral d delta J(delta) e^{i delta tau}, independent
// of the closed form above.
double memory_kernel_quadrature(const TCParams& params, double tau,
                                const KernelConfig& config);

}  // namespace tc::oracle
