#include "tc/oracle/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tc/errors.hpp"

namespace tc::oracle {
namespace {

// Ten times the 1e-3 tolerance this oracle is held to elsewhere.
constexpr double kSelfCheckTol = 1e-2;

// One trapezoidal pass over a uniform grid of n_steps intervals of width h.
// The memory integral is re-quadratured from scratch every step (O(M^2));
// the update is implicit in the bright amplitude B = sum_n c_n, which is a
// scalar linear solve because the kernel couples atoms only through B.
std::vector<Eigen::VectorXd> solve_nodes(const TCParams& params, double h,
                                         std::size_t n_steps) {
    const double n = static_cast<double>(params.n_atoms);
    const double f0 = params.g * params.g;

    std::vector<double> kernel(n_steps + 1);
    for (std::size_t m = 0; m <= n_steps; ++m) {
        kernel[m] = f0 * std::exp(-0.5 * params.kappa * static_cast<double>(m) * h);
    }

    std::vector<Eigen::VectorXd> nodes;
    nodes.reserve(n_steps + 1);
    nodes.push_back(params.initial_coeffs);

    std::vector<double> bright(n_steps + 1, 0.0);
    bright[0] = params.initial_coeffs.sum();
    double deriv_prev = 0.0;  // -integral at t_0 vanishes

    for (std::size_t j = 0; j + 1 <= n_steps; ++j) {
        // Known part of the trapezoidal memory integral at t_{j+1}; the
        // missing (h/2) f(0) B_{j+1} term is absorbed into the solve below.
        double known = 0.5 * kernel[j + 1] * bright[0];
        for (std::size_t k = 1; k <= j; ++k) {
            known += kernel[j + 1 - k] * bright[k];
        }
        known *= -h;

        const double b_next = (bright[j] + 0.5 * n * h * (deriv_prev + known)) /
                              (1.0 + 0.25 * n * h * h * f0);
        const double deriv_next = known - 0.5 * h * f0 * b_next;

        nodes.push_back(nodes.back().array() + 0.5 * h * (deriv_prev + deriv_next));
        bright[j + 1] = b_next;
        deriv_prev = deriv_next;
    }
    return nodes;
}

Eigen::VectorXd interpolate(const std::vector<Eigen::VectorXd>& nodes, double h,
                            double t) {
    const auto last = nodes.size() - 1;
    auto j = static_cast<std::size_t>(std::floor(t / h));
    if (j >= last) {
        return nodes[last];
    }
    const double frac = (t - static_cast<double>(j) * h) / h;
    return (1.0 - frac) * nodes[j] + frac * nodes[j + 1];
}

}  // namespace

std::vector<CoefficientVector> volterra_evolve(const TCParams& params,
                                               const KernelConfig& config,
                                               const std::vector<double>& t_grid) {
    params.validate();
    config.validate();
    if (params.kappa <= 0.0) {
        throw ZeroLinewidth("volterra_evolve: kappa must be > 0");
    }
    if (t_grid.empty() || t_grid.front() != 0.0) {
        throw std::invalid_argument("volterra_evolve: t_grid must start at 0");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (t_grid[i] < t_grid[i - 1]) {
            throw std::invalid_argument("volterra_evolve: t_grid must be nondecreasing");
        }
    }

    const double t_end = t_grid.back();
    const auto n_steps =
        t_end > 0.0 ? static_cast<std::size_t>(std::ceil(t_end / config.h - 1e-9)) : 0;

    const auto nodes = solve_nodes(params, config.h, n_steps);
    if (config.self_check && n_steps > 0) {
        const auto fine = solve_nodes(params, 0.5 * config.h, 2 * n_steps);
        double worst = 0.0;
        for (std::size_t j = 0; j <= n_steps; ++j) {
            worst = std::max(worst, (nodes[j] - fine[2 * j]).cwiseAbs().maxCoeff());
        }
        if (worst > kSelfCheckTol) {
            throw StepTooLarge("volterra_evolve: step-halving check failed; h too large");
        }
    }

    std::vector<CoefficientVector> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        CoefficientVector c;
        c.t = t;
        c.values = interpolate(nodes, config.h, t);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace tc::oracle
