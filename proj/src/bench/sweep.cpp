#include "tc/bench/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "tc/errors.hpp"
#include "tc/oracle/qme.hpp"
#include "tc/oracle/volterra.hpp"
#include "tc/statevector.hpp"

namespace tc::bench {
namespace {

std::vector<double> uniform_grid(double t_max, int steps) {
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<std::size_t>(i)] =
            static_cast<double>(i) * t_max / static_cast<double>(steps - 1);
    }
    return grid;
}

PopulationVector circuit_point(const SweepSpec& spec, double t, std::size_t index) {
    const int n = spec.params.n_atoms;
    const auto coeffs = analytic::coefficients(spec.params, t);
    const auto angles = circuit::angles_from_coefficients(coeffs);
    const auto state = sim::run_circuit(circuit::build_circuit(angles));

    Eigen::VectorXd probs;
    if (spec.shots) {
        const auto histogram = sim::sample_counts(
            state, *spec.shots, spec.seed ^ static_cast<std::uint64_t>(index));
        probs = Eigen::VectorXd::Zero(n + 1);
        for (const auto& [outcome, count] : histogram.counts) {
            for (int b = 0; b <= n; ++b) {
                if ((outcome >> b) & 1U) {
                    probs[b] += static_cast<double>(count);
                }
            }
        }
        probs /= static_cast<double>(*spec.shots);
    } else {
        probs = sim::excitation_probabilities(state);
    }

    PopulationVector pop;
    pop.t = t;
    pop.atom_populations = probs.head(n);
    pop.ground_population = probs[n];
    return pop;
}

std::vector<PopulationVector> evaluate_backend(const SweepSpec& spec, Backend backend,
                                               const std::vector<double>& grid) {
    switch (backend) {
        case Backend::analytic: {
            std::vector<PopulationVector> series;
            series.reserve(grid.size());
            for (double t : grid) {
                series.push_back(analytic::populations(spec.params, t));
            }
            return series;
        }
        case Backend::circuit: {
            std::vector<PopulationVector> series;
            series.reserve(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                series.push_back(circuit_point(spec, grid[i], i));
            }
            return series;
        }
        case Backend::qme: {
            const auto config = oracle::IntegratorConfig::with_default_dt(spec.params, grid);
            return oracle::qme_evolve(spec.params, config);
        }
        case Backend::volterra: {
            if (spec.params.kappa <= 0.0) {
                throw BackendUnavailable("volterra backend requires kappa > 0");
            }
            oracle::KernelConfig config;
            config.self_check = false;  // per-sweep cost control; checked in tests
            const auto coeffs = oracle::volterra_evolve(spec.params, config, grid);
            std::vector<PopulationVector> series;
            series.reserve(coeffs.size());
            for (const auto& c : coeffs) {
                series.push_back(analytic::populations_from_coefficients(c));
            }
            return series;
        }
    }
    throw std::logic_error("evaluate_backend: unknown backend");
}

double series_distance(const std::vector<PopulationVector>& a,
                       const std::vector<PopulationVector>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst,
                         (a[i].atom_populations - b[i].atom_populations)
                             .cwiseAbs()
                             .maxCoeff());
        worst = std::max(worst, std::abs(a[i].ground_population - b[i].ground_population));
    }
    return worst;
}

}  // namespace

std::string to_string(Backend backend) {
    switch (backend) {
        case Backend::analytic: return "analytic";
        case Backend::circuit: return "circuit";
        case Backend::qme: return "qme";
        case Backend::volterra: return "volterra";
    }
    throw std::logic_error("to_string: unknown backend");
}

Backend backend_from_string(const std::string& name) {
    if (name == "analytic") return Backend::analytic;
    if (name == "circuit") return Backend::circuit;
    if (name == "qme") return Backend::qme;
    if (name == "volterra") return Backend::volterra;
    throw std::invalid_argument("unknown backend '" + name + "'");
}

void SweepSpec::validate() const {
    params.validate();
    if (!(t_max > 0.0)) {
        throw std::invalid_argument("SweepSpec: t_max must be > 0");
    }
    if (steps < 2) {
        throw std::invalid_argument("SweepSpec: steps must be >= 2");
    }
    std::vector<Backend> sorted = backends;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("SweepSpec: duplicate backend");
    }
    if (shots) {
        if (*shots < 1) {
            throw std::invalid_argument("SweepSpec: shots must be >= 1");
        }
        if (std::find(backends.begin(), backends.end(), Backend::circuit) ==
            backends.end()) {
            throw std::invalid_argument(
                "SweepSpec: shots require the circuit backend");
        }
    }
}

SweepReport run_sweep(const SweepSpec& spec) {
    spec.validate();

    SweepReport report;
    report.spec = spec;
    std::sort(report.spec.backends.begin(), report.spec.backends.end());
    report.time_grid = uniform_grid(spec.t_max, spec.steps);

    for (Backend backend : report.spec.backends) {
        const auto start = std::chrono::steady_clock::now();
        BackendSeries entry;
        entry.backend = backend;
        entry.series = evaluate_backend(report.spec, backend, report.time_grid);
        entry.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        report.series.push_back(std::move(entry));
    }

    const auto n_backends = static_cast<Eigen::Index>(report.series.size());
    report.max_abs_diff = Eigen::MatrixXd::Zero(n_backends, n_backends);
    for (Eigen::Index a = 0; a < n_backends; ++a) {
        for (Eigen::Index b = a + 1; b < n_backends; ++b) {
            const double d = series_distance(report.series[a].series,
                                             report.series[b].series);
            report.max_abs_diff(a, b) = d;
            report.max_abs_diff(b, a) = d;
        }
    }
    return report;
}

}  // namespace tc::bench
