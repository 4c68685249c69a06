#include "tc/bench/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "tc/bench/emit.hpp"
#include "tc/bench/sweep.hpp"
#include "tc/circuit.hpp"
#include "tc/numfmt.hpp"
#include "tc/statevector.hpp"

namespace tc::bench {
namespace {

struct CommonOptions {
    int n_atoms = 1;
    double g = 0.0;
    double kappa = 0.0;
};

void add_physics_flags(CLI::App* cmd, CommonOptions* opts) {
    cmd->add_option("--n", opts->n_atoms, "number of atoms")->required();
    cmd->add_option("--g", opts->g, "atom-cavity coupling rate")->required();
    cmd->add_option("--kappa", opts->kappa, "cavity loss rate")->required();
}

std::vector<Backend> parse_backends(const std::string& list) {
    std::vector<Backend> backends;
    std::stringstream stream(list);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) {
            backends.push_back(backend_from_string(item));
        }
    }
    return backends;
}

int write_output(const std::string& text, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(out_path);
    if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    file << text;
    return 0;
}

std::string outcome_bits(std::uint64_t outcome, int n_qubits) {
    // Environment qubit (highest index) leftmost, atom 1 (qubit 0) rightmost.
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int b = 0; b < n_qubits; ++b) {
        if ((outcome >> b) & 1U) {
            bits[static_cast<std::size_t>(n_qubits - 1 - b)] = '1';
        }
    }
    return bits;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Singly-excited open Tavis-Cummings toolkit"};
    app.require_subcommand(1);

    CommonOptions common;
    double t = 0.0;
    double t_max = 2.0;
    int steps = 101;
    std::string backends_list = "analytic";
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 42;
    double tol = 1e-6;
    std::string format = "csv";
    std::string out_path;

    CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "print c(t) at one time");
    add_physics_flags(coeffs_cmd, &common);
    coeffs_cmd->add_option("--t", t, "evaluation time")->required();
    coeffs_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "sweep a time grid across backends");
    add_physics_flags(sweep_cmd, &common);
    sweep_cmd->add_option("--t-max", t_max, "end of the time grid");
    sweep_cmd->add_option("--steps", steps, "number of grid points");
    sweep_cmd->add_option("--backends", backends_list, "comma-separated backends");
    sweep_cmd->add_option("--shots", shots, "sample the circuit backend");
    sweep_cmd->add_option("--seed", seed, "base seed for shot sampling");
    sweep_cmd->add_option("--format", format, "csv, json, or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    sweep_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* qasm_cmd =
        app.add_subcommand("qasm", "export the circuit for one time as OpenQASM 2.0");
    add_physics_flags(qasm_cmd, &common);
    qasm_cmd->add_option("--t", t, "snapshot time")->required();
    qasm_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* sample_cmd =
        app.add_subcommand("sample", "shot histogram of the circuit at one time");
    add_physics_flags(sample_cmd, &common);
    sample_cmd->add_option("--t", t, "snapshot time")->required();
    std::uint64_t sample_shots = 40000;
    sample_cmd->add_option("--shots", sample_shots, "number of shots");
    sample_cmd->add_option("--seed", seed, "sampling seed");
    sample_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "sweep and check pairwise backend agreement");
    add_physics_flags(compare_cmd, &common);
    compare_cmd->add_option("--t-max", t_max, "end of the time grid");
    compare_cmd->add_option("--steps", steps, "number of grid points");
    std::string compare_backends = "analytic,qme";
    compare_cmd->add_option("--backends", compare_backends, "comma-separated backends");
    compare_cmd->add_option("--shots", shots, "sample the circuit backend");
    compare_cmd->add_option("--seed", seed, "base seed for shot sampling");
    compare_cmd->add_option("--tol", tol, "max allowed pairwise difference");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tcbench");
    for (const auto& arg : args) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        const TCParams params = TCParams::atom1_excited(common.n_atoms, common.g, common.kappa);

        if (coeffs_cmd->parsed()) {
            const auto coeffs = analytic::coefficients(params, t);
            std::string text = "atom,c\n";
            for (int i = 0; i < params.n_atoms; ++i) {
                text += std::to_string(i + 1) + "," + csv_double(coeffs.values[i]) + "\n";
            }
            return write_output(text, out_path, out, err);
        }

        if (sweep_cmd->parsed()) {
            SweepSpec spec;
            spec.params = params;
            spec.t_max = t_max;
            spec.steps = steps;
            spec.backends = parse_backends(backends_list);
            spec.shots = shots;
            spec.seed = seed;
            const auto report = run_sweep(spec);
            std::string text;
            if (format == "csv") {
                text = emit_csv(report);
            } else if (format == "json") {
                text = emit_json(report);
            } else {
                text = emit_svg(report);
            }
            return write_output(text, out_path, out, err);
        }

        if (qasm_cmd->parsed()) {
            const auto coeffs = analytic::coefficients(params, t);
            const auto circ = circuit::build_circuit(circuit::angles_from_coefficients(coeffs));
            return write_output(circuit::export_qasm(circ, /*with_measurement=*/true),
                                out_path, out, err);
        }

        if (sample_cmd->parsed()) {
            const auto coeffs = analytic::coefficients(params, t);
            const auto circ = circuit::build_circuit(circuit::angles_from_coefficients(coeffs));
            const auto state = sim::run_circuit(circ);
            const auto histogram = sim::sample_counts(state, sample_shots, seed);
            std::string text = "outcome,count\n";
            for (const auto& [outcome, count] : histogram.counts) {
                text += outcome_bits(outcome, circ.n_qubits) + "," +
                        std::to_string(count) + "\n";
            }
            return write_output(text, out_path, out, err);
        }

        // compare
        SweepSpec spec;
        spec.params = params;
        spec.t_max = t_max;
        spec.steps = steps;
        spec.backends = parse_backends(compare_backends);
        spec.shots = shots;
        spec.seed = seed;
        const auto report = run_sweep(spec);

        out << "max |dp| between backends over the grid:\n";
        out << "backend";
        for (const auto& entry : report.series) {
            out << "," << to_string(entry.backend);
        }
        out << "\n";
        for (Eigen::Index r = 0; r < report.max_abs_diff.rows(); ++r) {
            out << to_string(report.series[static_cast<std::size_t>(r)].backend);
            for (Eigen::Index c = 0; c < report.max_abs_diff.cols(); ++c) {
                out << "," << csv_double(report.max_abs_diff(r, c));
            }
            out << "\n";
        }
        for (const auto& entry : report.series) {
            err << to_string(entry.backend) << ": " << entry.wall_seconds << " s\n";
        }
        const double worst = report.max_abs_diff.size() > 0
                                 ? report.max_abs_diff.maxCoeff()
                                 : 0.0;
        if (worst > tol) {
            out << "FAIL: max pairwise difference " << csv_double(worst) << " > tol "
                << csv_double(tol) << "\n";
            return 1;
        }
        out << "OK: max pairwise difference " << csv_double(worst) << " <= tol "
            << csv_double(tol) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tc::bench
