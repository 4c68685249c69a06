#include "tc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tc/errors.hpp"
#include "tc/numfmt.hpp"

namespace tc::circuit {
namespace {

// Tolerance for inverse-trig arguments marginally past +-1. Upstream
// floating error can push a realizable argument just over the boundary;
// anything further out is a genuine inconsistency, and clamping it would
// mask bugs.
constexpr double kClampTol = 1e-9;

// Below this magnitude a denominator (and the matching coefficient) count
// as exactly depleted.
constexpr double kDepleted = 1e-12;

void check_index(int qubit, const char* what) {
    if (qubit < 0) {
        throw IndexOutOfRange(std::string("Gate: negative ") + what + " index");
    }
}

}  // namespace

Gate Gate::pauli_x(int target) {
    check_index(target, "target");
    Gate gate;
    gate.kind = Kind::pauli_x;
    gate.target = target;
    return gate;
}

Gate Gate::controlled_ry(double angle, int control, int target) {
    check_index(control, "control");
    check_index(target, "target");
    if (control == target) {
        throw IndexOutOfRange("Gate: control and target must differ");
    }
    if (!std::isfinite(angle)) {
        throw NaNInput("Gate: rotation angle must be finite");
    }
    Gate gate;
    gate.kind = Kind::controlled_ry;
    gate.control = control;
    gate.target = target;
    gate.angle = angle;
    return gate;
}

Gate Gate::cnot(int control, int target) {
    check_index(control, "control");
    check_index(target, "target");
    if (control == target) {
        throw IndexOutOfRange("Gate: control and target must differ");
    }
    Gate gate;
    gate.kind = Kind::cnot;
    gate.control = control;
    gate.target = target;
    return gate;
}

AngleVector angles_from_coefficients(const Eigen::Ref<const Eigen::VectorXd>& coeffs) {
    const Eigen::Index n = coeffs.size();
    if (n < 1) {
        throw std::invalid_argument("angles_from_coefficients: empty coefficient vector");
    }
    if (!coeffs.allFinite()) {
        throw NaNInput("angles_from_coefficients: non-finite coefficient");
    }
    if (coeffs.squaredNorm() > 1.0 + kClampTol) {
        throw InconsistentCoefficients(
            "angles_from_coefficients: squared norm exceeds 1 + 1e-9");
    }

    AngleVector angles;
    angles.thetas.resize(n);
    angles.thetas[0] = std::acos(std::clamp(coeffs[0], -1.0, 1.0));

    // Running denominator sin(th1) cos(th2) ... cos(th_{n-1}): the amplitude
    // still undistributed when atom n is reached.
    double denom = std::sin(angles.thetas[0]);
    for (Eigen::Index i = 1; i < n; ++i) {
        if (std::abs(denom) < kDepleted && std::abs(coeffs[i]) < kDepleted) {
            angles.thetas[i] = 0.0;
            continue;
        }
        const double arg = coeffs[i] / denom;
        if (!(std::abs(arg) <= 1.0 + kClampTol)) {
            throw InconsistentCoefficients(
                "angles_from_coefficients: coefficient vector not realizable "
                "(arcsin argument exceeds 1 + 1e-9)");
        }
        angles.thetas[i] = std::asin(std::clamp(arg, -1.0, 1.0));
        denom *= std::cos(angles.thetas[i]);
    }
    return angles;
}

AngleVector angles_from_coefficients(const CoefficientVector& coeffs) {
    return angles_from_coefficients(Eigen::Ref<const Eigen::VectorXd>(coeffs.values));
}

CircuitIR build_circuit(const AngleVector& angles) {
    const int n = static_cast<int>(angles.thetas.size());
    if (n < 1) {
        throw std::invalid_argument("build_circuit: need at least one angle");
    }
    const int env = n;  // environment qubit index

    CircuitIR circuit;
    circuit.n_qubits = n + 1;
    circuit.gates.reserve(static_cast<std::size_t>(2 * n + 1));
    circuit.gates.push_back(Gate::pauli_x(0));
    circuit.gates.push_back(Gate::controlled_ry(2.0 * angles.thetas[0], 0, env));
    circuit.gates.push_back(Gate::cnot(env, 0));
    for (int atom = 2; atom <= n; ++atom) {
        circuit.gates.push_back(
            Gate::controlled_ry(2.0 * angles.thetas[atom - 1], env, atom - 1));
        circuit.gates.push_back(Gate::cnot(atom - 1, env));
    }
    return circuit;
}

std::string export_qasm(const CircuitIR& circuit, bool with_measurement) {
    if (circuit.n_qubits < 1) {
        throw std::invalid_argument("export_qasm: empty circuit");
    }
    const std::string n = std::to_string(circuit.n_qubits);
    std::string out;
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    out += "qreg q[" + n + "];\n";
    if (with_measurement) {
        out += "creg c[" + n + "];\n";
    }
    for (const Gate& gate : circuit.gates) {
        switch (gate.kind) {
            case Gate::Kind::pauli_x:
                out += "x q[" + std::to_string(gate.target) + "];\n";
                break;
            case Gate::Kind::controlled_ry:
                out += "cu3(" + shortest_double(gate.angle) + ",0,0) q[" +
                       std::to_string(gate.control) + "],q[" +
                       std::to_string(gate.target) + "];\n";
                break;
            case Gate::Kind::cnot:
                out += "cx q[" + std::to_string(gate.control) + "],q[" +
                       std::to_string(gate.target) + "];\n";
                break;
        }
    }
    if (with_measurement) {
        for (int q = 0; q < circuit.n_qubits; ++q) {
            const std::string i = std::to_string(q);
            out += "measure q[" + i + "] -> c[" + i + "];\n";
        }
    }
    return out;
}

}  // namespace tc::circuit
