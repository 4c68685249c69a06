// Memory-kernel (Volterra) oracle: trapezoidal solver for
//   dc_n/dt = - int_0^t f(t - t') sum_m c_m(t') dt',  f(tau) = g^2 e^{-kappa tau/2},
// deliberately independent of the Laplace-transform closed form. The
// exponential kernel is *not* reduced to an auxiliary ODE; the memory
// integral is quadratured in full at O(M^2) cost for M steps.
#pragma once

#include <vector>

#include "tc/analytic.hpp"
#include "tc/oracle/spectral.hpp"

namespace tc::oracle {

// Solves on a uniform grid of step config.h and linearly interpolates onto
// t_grid (nondecreasing, starting at 0). Requires kappa > 0 (ZeroLinewidth
// otherwise). With config.self_check set, re-solves at h/2 and throws
// StepTooLarge if the runs disagree beyond ten times the advertised
// oracle tolerance.
std::vector<CoefficientVector> volterra_evolve(const TCParams& params,
                                               const KernelConfig& config,
                                               const std::vector<double>& t_grid);

}  // namespace tc::oracle
