#include "tc/oracle/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "tc/errors.hpp"

namespace tc::oracle {
namespace {

void require_lossy(const TCParams& params, const char* where) {
    if (params.kappa <= 0.0) {
        throw ZeroLinewidth(std::string(where) +
                            ": kappa must be > 0 (Lorentzian degenerates)");
    }
}

}  // namespace

void KernelConfig::validate() const {
    if (!(h > 0.0)) {
        throw std::invalid_argument("KernelConfig: h must be > 0");
    }
    if (detuning_halfwidth < 0.0) {
        throw std::invalid_argument("KernelConfig: detuning_halfwidth must be >= 0");
    }
}

double spectral_density(const TCParams& params, double detuning) {
    params.validate();
    require_lossy(params, "spectral_density");
    const double half_width = 0.5 * params.kappa;
    return (params.g * params.g / (2.0 * std::numbers::pi)) * params.kappa /
           (detuning * detuning + half_width * half_width);
}

double memory_kernel(const TCParams& params, double tau) {
    params.validate();
    require_lossy(params, "memory_kernel");
    if (!(tau >= 0.0)) {
        throw std::invalid_argument("memory_kernel: tau must be >= 0");
    }
    return params.g * params.g * std::exp(-0.5 * params.kappa * tau);
}

double memory_kernel_quadrature(const TCParams& params, double tau,
                                const KernelConfig& config) {
    params.validate();
    config.validate();
    require_lossy(params, "memory_kernel_quadrature");
    if (!(tau >= 0.0)) {
        throw std::invalid_argument("memory_kernel_quadrature: tau must be >= 0");
    }

    const double half_range = config.detuning_halfwidth > 0.0
                                  ? config.detuning_halfwidth
                                  : 8000.0 * params.kappa;
    // Resolve both the Lorentzian peak (width kappa/2) and the e^{i d tau}
    // oscillation (period 2 pi / tau).
    double step = params.kappa / 50.0;
    if (tau > 0.0) {
        step = std::min(step, 0.04 / tau);
    }
    auto panels = static_cast<std::size_t>(std::ceil(2.0 * half_range / step));
    panels += panels % 2;  // Simpson needs an even panel count

    const double h = 2.0 * half_range / static_cast<double>(panels);
    auto integrand = [&](double delta) {
        return spectral_density(params, delta) *
               std::complex<double>(std::cos(delta * tau), std::sin(delta * tau));
    };
    std::complex<double> sum = integrand(-half_range) + integrand(half_range);
    for (std::size_t k = 1; k < panels; ++k) {
        const double delta = -half_range + static_cast<double>(k) * h;
        sum += (k % 2 == 1 ? 4.0 : 2.0) * integrand(delta);
    }
    // The imaginary part integrates an odd function and cancels to rounding.
    return (h / 3.0) * sum.real();
}

}  // namespace tc::oracle
