#include "tc/oracle/qme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tc/errors.hpp"

namespace tc::oracle {
namespace {

constexpr double kTraceTol = 1e-6;
// Step-halving disagreement beyond this over the first grid interval
// signals a misconfigured dt.
constexpr double kConvergenceTol = 1e-7;

void rk4_step(const TCParams& params, Eigen::MatrixXcd& rho, double h) {
    const Eigen::MatrixXcd k1 = lindblad_rhs(params, rho);
    const Eigen::MatrixXcd k2 = lindblad_rhs(params, rho + (0.5 * h) * k1);
    const Eigen::MatrixXcd k3 = lindblad_rhs(params, rho + (0.5 * h) * k2);
    const Eigen::MatrixXcd k4 = lindblad_rhs(params, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void advance(const TCParams& params, Eigen::MatrixXcd& rho, double span, double dt) {
    if (span <= 0.0) {
        return;
    }
    const auto full_steps = static_cast<long>(std::floor(span / dt));
    for (long s = 0; s < full_steps; ++s) {
        rk4_step(params, rho, dt);
    }
    const double remainder = span - static_cast<double>(full_steps) * dt;
    if (remainder > 1e-9 * dt) {
        rk4_step(params, rho, remainder);
    }
}

PopulationVector read_populations(const Eigen::MatrixXcd& rho, double t, int n_atoms) {
    PopulationVector out;
    out.t = t;
    out.atom_populations = rho.diagonal().segment(1, n_atoms).real();
    out.ground_population =
        (rho(0, 0) + rho(n_atoms + 1, n_atoms + 1)).real();
    return out;
}

}  // namespace

IntegratorConfig IntegratorConfig::with_default_dt(const TCParams& params,
                                                   std::vector<double> t_grid) {
    IntegratorConfig config;
    config.dt = 1e-3 / std::max({1.0, params.collective_rate(), params.kappa});
    config.t_grid = std::move(t_grid);
    return config;
}

void IntegratorConfig::validate() const {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("IntegratorConfig: dt must be > 0");
    }
    if (t_grid.empty() || t_grid.front() != 0.0) {
        throw std::invalid_argument("IntegratorConfig: t_grid must start at 0");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (t_grid[i] < t_grid[i - 1]) {
            throw std::invalid_argument("IntegratorConfig: t_grid must be nondecreasing");
        }
    }
}

SubspaceState initial_state(const TCParams& params) {
    params.validate();
    const int dim = params.n_atoms + 2;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi.segment(1, params.n_atoms) = params.initial_coeffs.cast<std::complex<double>>();
    SubspaceState state;
    state.rho = psi * psi.adjoint();
    return state;
}

Eigen::MatrixXcd lindblad_rhs(const TCParams& params, const Eigen::MatrixXcd& rho) {
    const int n = params.n_atoms;
    const Eigen::Index dim = n + 2;
    const Eigen::Index ph = n + 1;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("lindblad_rhs: density matrix has wrong dimension");
    }

    // H rho and rho H applied blockwise: H couples each |e_n> to |ph| and
    // leaves |vac> alone, so the products only touch the photon row/column.
    Eigen::MatrixXcd h_rho = Eigen::MatrixXcd::Zero(dim, dim);
    h_rho.middleRows(1, n) = params.g * rho.row(ph).replicate(n, 1);
    h_rho.row(ph) = params.g * rho.middleRows(1, n).colwise().sum();

    Eigen::MatrixXcd rho_h = Eigen::MatrixXcd::Zero(dim, dim);
    rho_h.middleCols(1, n) = params.g * rho.col(ph).replicate(1, n);
    rho_h.col(ph) = params.g * rho.middleCols(1, n).rowwise().sum();

    Eigen::MatrixXcd out = std::complex<double>(0.0, -1.0) * (h_rho - rho_h);

    // Dissipator for C = sqrt(kappa) |vac><ph|: feed the vacuum from the
    // photon population and damp the photon row/column at kappa/2.
    out(0, 0) += params.kappa * rho(ph, ph);
    out.row(ph) -= (0.5 * params.kappa) * rho.row(ph);
    out.col(ph) -= (0.5 * params.kappa) * rho.col(ph);
    return out;
}

std::vector<PopulationVector> qme_evolve(const TCParams& params,
                                         const IntegratorConfig& config) {
    params.validate();
    config.validate();

    Eigen::MatrixXcd rho = initial_state(params).rho;

    if (config.convergence_check) {
        // One cheap step-halving probe over the first nonzero interval.
        double t_first = 0.0;
        for (double t : config.t_grid) {
            if (t > 0.0) {
                t_first = t;
                break;
            }
        }
        if (t_first > 0.0) {
            Eigen::MatrixXcd coarse = rho;
            Eigen::MatrixXcd fine = rho;
            advance(params, coarse, t_first, config.dt);
            advance(params, fine, t_first, 0.5 * config.dt);
            const double diff = (coarse - fine).cwiseAbs().maxCoeff();
            if (diff > kConvergenceTol) {
                throw StepTooLarge("qme_evolve: step-halving check failed; dt too large");
            }
        }
    }

    std::vector<PopulationVector> out;
    out.reserve(config.t_grid.size());
    double t_current = 0.0;
    for (double t : config.t_grid) {
        advance(params, rho, t - t_current, config.dt);
        t_current = t;
        const double trace = rho.trace().real();
        if (std::abs(trace - 1.0) > kTraceTol) {
            throw StepTooLarge("qme_evolve: trace drift exceeds 1e-6; dt too large");
        }
        out.push_back(read_populations(rho, t, params.n_atoms));
    }
    return out;
}

}  // namespace tc::oracle
