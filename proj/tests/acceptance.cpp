// Acceptance suite: runs every end-to-end criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of
// failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tc/analytic.hpp"
#include "tc/bench/emit.hpp"
#include "tc/bench/sweep.hpp"
#include "tc/circuit.hpp"
#include "tc/oracle/qme.hpp"
#include "tc/oracle/volterra.hpp"
#include "tc/statevector.hpp"
#include "test_util.hpp"

using namespace tc;
namespace an = tc::analytic;
namespace orc = tc::oracle;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw Failure(message);
    }
}

std::vector<TCParams> paper_sets() {
    return {TCParams::atom1_excited(1, 10.0, 5.0), TCParams::atom1_excited(2, 10.0, 5.0),
            TCParams::atom1_excited(3, 2.0, 5.0), TCParams::atom1_excited(7, 5.0, 5.0)};
}

std::vector<double> uniform_grid(double t_max, int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = t_max * static_cast<double>(i) / (points - 1);
    }
    return grid;
}

std::string describe(const TCParams& p) {
    std::ostringstream text;
    text << "(N=" << p.n_atoms << ", g=" << p.g << ", kappa=" << p.kappa << ")";
    return text.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1: analytic vs QME (1e-6) and vs Volterra (1e-3) ------------

void triple_oracle_agreement() {
    const auto start = std::chrono::steady_clock::now();
    const auto grid = uniform_grid(2.0, 101);
    for (const auto& params : paper_sets()) {
        orc::IntegratorConfig qme_config;
        qme_config.dt = 1e-4;
        qme_config.t_grid = grid;
        const auto qme = orc::qme_evolve(params, qme_config);

        orc::KernelConfig kernel_config;
        kernel_config.h = 2.5e-4;
        kernel_config.self_check = false;
        const auto volterra = orc::volterra_evolve(params, kernel_config, grid);

        double worst_qme = 0.0;
        double worst_volterra = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto exact = an::populations(params, grid[i]);
            worst_qme = std::max(worst_qme,
                                 (qme[i].atom_populations - exact.atom_populations)
                                     .cwiseAbs()
                                     .maxCoeff());
            worst_qme = std::max(
                worst_qme, std::abs(qme[i].ground_population - exact.ground_population));
            const Eigen::VectorXd vpops = volterra[i].values.array().square();
            worst_volterra = std::max(
                worst_volterra, (vpops - exact.atom_populations).cwiseAbs().maxCoeff());
        }
        require(worst_qme <= 1e-6, "analytic vs qme diff " + std::to_string(worst_qme) +
                                       " > 1e-6 for " + describe(params));
        require(worst_volterra <= 1e-3,
                "analytic vs volterra diff " + std::to_string(worst_volterra) +
                    " > 1e-3 for " + describe(params));
    }
    const double elapsed = seconds_since(start);
    require(elapsed <= 30.0,
            "runtime " + std::to_string(elapsed) + " s exceeds the 30 s budget");
}

// --- criterion 2: circuit round-trip exactness ------------------------------

void circuit_round_trip() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xC0FFEE);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            const Eigen::VectorXd c = tctest::random_coeffs(rng, n);
            const auto state = sim::run_circuit(
                circuit::build_circuit(circuit::angles_from_coefficients(c)));
            const auto probs = sim::excitation_probabilities(state);

            Eigen::VectorXd expected(n + 1);
            expected.head(n) = c.array().square();
            expected[n] = 1.0 - c.squaredNorm();
            require((probs - expected).cwiseAbs().maxCoeff() <= 1e-12,
                    "round-trip probability mismatch at N=" + std::to_string(n));
            require(sim::onehot_residual(state) <= 1e-20,
                    "one-hot residual above 1e-20 at N=" + std::to_string(n));
            require(std::norm(state.amplitudes[0]) <= 1e-20,
                    "all-zero state carries mass at N=" + std::to_string(n));
        }
    }
    const double elapsed = seconds_since(start);
    require(elapsed <= 60.0,
            "runtime " + std::to_string(elapsed) + " s exceeds the 60 s budget");
}

// --- criterion 3: finite-shot protocol --------------------------------------

void finite_shot_protocol() {
    bench::SweepSpec spec;
    spec.params = TCParams::atom1_excited(7, 5.0, 5.0);
    spec.t_max = 2.0;
    spec.steps = 101;
    spec.backends = {bench::Backend::analytic, bench::Backend::circuit};
    spec.shots = 40000;
    spec.seed = 42;
    const auto report = bench::run_sweep(spec);
    const auto& analytic_series = report.series[0].series;
    const auto& sampled_series = report.series[1].series;

    const double shots = 40000.0;
    for (std::size_t i = 0; i < report.time_grid.size(); ++i) {
        for (int ch = 0; ch <= 7; ++ch) {
            const double p = ch < 7 ? analytic_series[i].atom_populations[ch]
                                    : analytic_series[i].ground_population;
            const double sampled = ch < 7 ? sampled_series[i].atom_populations[ch]
                                          : sampled_series[i].ground_population;
            const double bound = 3.0 * std::sqrt(p * (1.0 - p) / shots);
            require(std::abs(sampled - p) <= bound,
                    "sampled population off by " + std::to_string(std::abs(sampled - p)) +
                        " (3 sigma = " + std::to_string(bound) + ") at t=" +
                        std::to_string(report.time_grid[i]) + ", channel " +
                        std::to_string(ch));
        }
    }
}

// --- criterion 4: strong-coupling oscillation spacing -----------------------

void oscillation_spacing() {
    const auto params = TCParams::atom1_excited(7, 5.0, 5.0);
    const double split = std::abs(an::splitting_constant(params).value);
    const double expected_spacing = 4.0 * std::numbers::pi / split;

    const double dt = 1e-4;
    const int points = 20001;  // t in [0, 2]
    std::vector<double> p1(points);
    for (int i = 0; i < points; ++i) {
        p1[static_cast<std::size_t>(i)] =
            an::populations(params, dt * i).atom_populations[0];
    }

    std::vector<double> extrema;
    for (int i = 1; i + 1 < points; ++i) {
        const double left = p1[i] - p1[i - 1];
        const double right = p1[i + 1] - p1[i];
        if (left * right < 0.0) {
            // Parabolic refinement around the grid extremum.
            const double denom = p1[i - 1] - 2.0 * p1[i] + p1[i + 1];
            const double shift = denom != 0.0
                                     ? 0.5 * (p1[i - 1] - p1[i + 1]) / denom
                                     : 0.0;
            extrema.push_back(dt * (i + shift));
        }
    }
    require(extrema.size() >= 5, "found too few extrema: " + std::to_string(extrema.size()));
    for (std::size_t k = 1; k < extrema.size(); ++k) {
        const double spacing = extrema[k] - extrema[k - 1];
        require(std::abs(spacing - expected_spacing) <= 0.02 * expected_spacing,
                "extrema spacing " + std::to_string(spacing) + " deviates from " +
                    std::to_string(expected_spacing) + " by more than 2%");
    }
}

// --- criterion 5: dark-state steady state -----------------------------------

void dark_state_steady_state() {
    for (const auto& params : paper_sets()) {
        const double n = static_cast<double>(params.n_atoms);
        const auto pops = an::populations(params, 40.0 / params.kappa);
        require(std::abs(pops.atom_populations[0] - (1.0 - 1.0 / n) * (1.0 - 1.0 / n)) <=
                    1e-3,
                "atom-1 steady population off for " + describe(params));
        for (int i = 1; i < params.n_atoms; ++i) {
            require(std::abs(pops.atom_populations[i] - 1.0 / (n * n)) <= 1e-3,
                    "atom-" + std::to_string(i + 1) + " steady population off for " +
                        describe(params));
        }
        require(std::abs(pops.ground_population - 1.0 / n) <= 1e-3,
                "ground steady population off for " + describe(params));
        const double trapped = pops.atom_populations.sum();
        require(std::abs(trapped - (1.0 - 1.0 / n)) <= 1e-3,
                "trapped excitation off for " + describe(params));
    }
}

// --- criterion 6: conservation suite ----------------------------------------

void conservation_suite() {
    const auto grid = uniform_grid(2.0, 101);

    for (const auto& params : paper_sets()) {
        // Analytic normalization and dark-mode constancy.
        const Eigen::VectorXd dark0 =
            params.initial_coeffs.array() - params.initial_coeffs.mean();
        for (double t : grid) {
            const auto pops = an::populations(params, t);
            const double total = pops.atom_populations.sum() + pops.ground_population;
            require(std::abs(total - 1.0) <= 1e-12,
                    "analytic normalization drift at " + describe(params));
            const auto c = an::coefficients(params, t);
            const Eigen::VectorXd dark = c.values.array() - c.values.mean();
            require((dark - dark0).cwiseAbs().maxCoeff() <= 1e-12,
                    "dark-mode drift at " + describe(params));
        }

        // Exact circuit backend normalization.
        bench::SweepSpec spec;
        spec.params = params;
        spec.t_max = 2.0;
        spec.steps = 21;
        spec.backends = {bench::Backend::circuit};
        const auto report = bench::run_sweep(spec);
        for (const auto& point : report.series[0].series) {
            const double total = point.atom_populations.sum() + point.ground_population;
            require(std::abs(total - 1.0) <= 1e-12,
                    "circuit normalization drift at " + describe(params));
        }

        // Master-equation trace preservation.
        const auto config = orc::IntegratorConfig::with_default_dt(
            params, uniform_grid(2.0, 21));
        for (const auto& point : orc::qme_evolve(params, config)) {
            const double trace = point.atom_populations.sum() + point.ground_population;
            require(std::abs(trace - 1.0) <= 1e-9,
                    "qme trace drift at " + describe(params));
        }
    }

    // Closed-system periodicity with T = 2 pi / (g sqrt(N)).
    for (const auto& params :
         {TCParams::atom1_excited(1, 1.0, 0.0), TCParams::atom1_excited(4, 1.0, 0.0),
          TCParams::atom1_excited(7, 5.0, 0.0)}) {
        const double period = 2.0 * std::numbers::pi / params.collective_rate();
        for (int i = 0; i <= 32; ++i) {
            const double t = period * static_cast<double>(i) / 32.0;
            const auto now = an::coefficients(params, t);
            const auto later = an::coefficients(params, t + period);
            require((now.values - later.values).cwiseAbs().maxCoeff() <= 1e-9,
                    "periodicity drift at " + describe(params));
        }
    }
}

// --- criterion 7: format fixtures -------------------------------------------

void format_fixtures() {
    // QASM fixture.
    const auto qasm_params = TCParams::atom1_excited(3, 2.0, 5.0);
    const auto coeffs = an::coefficients(qasm_params, 0.5);
    const auto circ = circuit::build_circuit(circuit::angles_from_coefficients(coeffs));
    const auto qasm_a = circuit::export_qasm(circ, true);
    const auto qasm_b = circuit::export_qasm(circ, true);
    require(qasm_a == qasm_b, "qasm emitter is not run-to-run deterministic");
    require(qasm_a == tctest::read_file(tctest::golden_path("qasm_n3_g2_k5_t0.5.qasm")),
            "qasm output deviates from the frozen fixture");

    // Sweep fixtures (CSV + SVG) for the frozen spec.
    bench::SweepSpec spec;
    spec.params = TCParams::atom1_excited(2, 10.0, 5.0);
    spec.t_max = 0.5;
    spec.steps = 6;
    spec.backends = {bench::Backend::analytic, bench::Backend::circuit};
    spec.shots = 1000;
    spec.seed = 42;
    const auto report_a = bench::run_sweep(spec);
    const auto report_b = bench::run_sweep(spec);

    const auto csv = bench::emit_csv(report_a);
    require(csv == bench::emit_csv(report_b), "csv emitter is not run-to-run deterministic");
    require(csv == tctest::read_file(tctest::golden_path("sweep_n2.csv")),
            "csv output deviates from the frozen fixture");

    const auto svg = bench::emit_svg(report_a);
    require(svg == bench::emit_svg(report_b), "svg emitter is not run-to-run deterministic");
    require(svg == tctest::read_file(tctest::golden_path("sweep_n2.svg")),
            "svg output deviates from the frozen fixture");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"1 triple-oracle agreement (qme 1e-6, volterra 1e-3, <= 30 s)",
         triple_oracle_agreement},
        {"2 circuit round-trip exactness (1e-12, residual 1e-20, <= 60 s)",
         circuit_round_trip},
        {"3 finite-shot protocol (40000 shots, seed 42, 3 sigma)", finite_shot_protocol},
        {"4 strong-coupling oscillation spacing (4 pi / |D| within 2%)",
         oscillation_spacing},
        {"5 dark-state steady state (1e-3 at t = 40/kappa)", dark_state_steady_state},
        {"6 conservation suite (normalization, trace, dark mode, periodicity)",
         conservation_suite},
        {"7 format fixtures (QASM/CSV/SVG byte-identical)", format_fixtures},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        try {
            run();
            std::printf("PASS  %s\n", name.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL  %s: %s\n", name.c_str(), e.what());
        }
        std::fflush(stdout);
    }
    return failures;
}
