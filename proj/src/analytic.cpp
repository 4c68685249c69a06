#include "tc/analytic.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "tc/errors.hpp"

namespace tc::analytic {
namespace {

// |D| below this fraction of the dominant rate switches the envelope to the
// series limit; the closed form divides by D.
constexpr double kDegenerateFraction = 1e-8;

double discriminant(const TCParams& params) {
    const double n = static_cast<double>(params.n_atoms);
    return params.kappa * params.kappa - 16.0 * n * params.g * params.g;
}

}  // namespace

SplittingConstant splitting_constant(const TCParams& params) {
    params.validate();
    return {std::sqrt(std::complex<double>(discriminant(params), 0.0))};
}

double envelope(const TCParams& params, double t) {
    params.validate();
    if (!(t >= 0.0)) {
        throw std::invalid_argument("envelope: t must be >= 0");
    }
    const double disc = discriminant(params);
    const double quarter_t = 0.25 * t;
    const double rate_scale =
        std::max({params.kappa, 4.0 * params.collective_rate(), 1.0});

    if (std::sqrt(std::abs(disc)) < kDegenerateFraction * rate_scale) {
        // cosh(x) + (kappa t/4) sinh(x)/x with x = D t/4, as real series in
        // w = x^2 = D^2 t^2 / 16. At w = 0 this is the exact critically
        // damped limit e^{-kappa t/4} (1 + kappa t/4).
        const double w = disc * quarter_t * quarter_t;
        if (std::abs(w) > 1e-2) {
            throw DegenerateLimitUnstable(
                "envelope: series correction out of range; degeneracy threshold "
                "misconfigured for |D t/4|^2 = " + std::to_string(w));
        }
        const double cosh_series = 1.0 + w * (1.0 / 2.0 + w * (1.0 / 24.0 + w / 720.0));
        const double sinhc_series = 1.0 + w * (1.0 / 6.0 + w * (1.0 / 120.0 + w / 5040.0));
        return std::exp(-params.kappa * quarter_t) *
               (cosh_series + params.kappa * quarter_t * sinhc_series);
    }

    // Exponential split of e^{-kappa t/4} (cosh(D t/4) + (kappa/D) sinh(D t/4)).
    // Both exponents have non-positive real part (D is either purely
    // imaginary or real with D <= kappa), so nothing overflows at large t.
    const std::complex<double> split = std::sqrt(std::complex<double>(disc, 0.0));
    const std::complex<double> ratio = params.kappa / split;
    const std::complex<double> value =
        0.5 * ((1.0 + ratio) * std::exp((split - params.kappa) * quarter_t) +
               (1.0 - ratio) * std::exp(-(split + params.kappa) * quarter_t));
    if (!(std::abs(value.imag()) <= 1e-12)) {
        throw std::logic_error("envelope: imaginary residue exceeds 1e-12");
    }
    return value.real();
}

CoefficientVector coefficients(const TCParams& params, double t) {
    const double env = envelope(params, t);
    const double bright0 = params.initial_coeffs.sum();
    const double n = static_cast<double>(params.n_atoms);
    CoefficientVector out;
    out.t = t;
    out.values = params.initial_coeffs.array() - (bright0 / n) * (1.0 - env);
    return out;
}

PopulationVector populations(const TCParams& params, double t) {
    return populations_from_coefficients(coefficients(params, t));
}

CoefficientVector steady_state_coefficients(const TCParams& params) {
    params.validate();
    if (params.g <= 0.0 || params.kappa <= 0.0) {
        throw NoSteadyState("steady_state_coefficients: envelope does not decay "
                            "unless g > 0 and kappa > 0");
    }
    const double bright0 = params.initial_coeffs.sum();
    const double n = static_cast<double>(params.n_atoms);
    CoefficientVector out;
    out.t = std::numeric_limits<double>::infinity();
    out.values = params.initial_coeffs.array() - bright0 / n;
    return out;
}

PopulationVector populations_from_coefficients(const CoefficientVector& coeffs) {
    PopulationVector out;
    out.t = coeffs.t;
    out.atom_populations = coeffs.values.array().square();
    out.ground_population = 1.0 - out.atom_populations.sum();
    return out;
}

Eigen::VectorXd hamming_level_diag(int n_atoms) {
    if (n_atoms < 1 || n_atoms > 20) {
        throw SizeLimitExceeded("hamming_level_diag: n_atoms must be in [1, 20]");
    }
    const double half_n = 0.5 * static_cast<double>(n_atoms);
    const std::uint64_t dim = std::uint64_t{1} << n_atoms;
    Eigen::VectorXd diag(static_cast<Eigen::Index>(dim));
    for (std::uint64_t p = 0; p < dim; ++p) {
        diag[static_cast<Eigen::Index>(p)] =
            half_n - static_cast<double>(std::popcount(p));
    }
    return diag;
}

}  // namespace tc::analytic
