// Rotation-angle extraction, gate-level IR, and OpenQASM 2.0 export for the
// (N+1)-qubit circuit that prepares a time-t snapshot of the dynamics.
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tc/analytic.hpp"

namespace tc::circuit {

// Cascade angles theta_1..theta_N (radians).
// theta_1 in [0, pi]; theta_n in [-pi/2, pi/2] for n >= 2.
struct AngleVector {
    Eigen::VectorXd thetas;
};

struct Gate {
    enum class Kind { pauli_x, controlled_ry, cnot };

    Kind kind = Kind::pauli_x;
    int control = -1;  // unused for pauli_x
    int target = 0;
    double angle = 0.0;  // full rotation angle (2 theta) for controlled_ry

    static Gate pauli_x(int target);
    static Gate controlled_ry(double angle, int control, int target);
    static Gate cnot(int control, int target);
};

// Ordered gate list over N+1 qubits. Qubits 0..N-1 are the atom qubits
// (atom n maps to qubit n-1), qubit N is the environment qubit.
struct CircuitIR {
    int n_qubits = 0;
    std::vector<Gate> gates;
};

// theta_1 = arccos(c_1), theta_n = arcsin(c_n / (sin th1 prod_{m<n} cos th_m)).
// Arguments within 1e-9 of +-1 are clamped; a vanishing denominator with a
// vanishing coefficient yields theta_n = 0. Larger violations throw
// InconsistentCoefficients; non-finite input throws NaNInput.
AngleVector angles_from_coefficients(const Eigen::Ref<const Eigen::VectorXd>& coeffs);
AngleVector angles_from_coefficients(const CoefficientVector& coeffs);

// Gate sequence: X(0); CRY(2 th1, control 0 -> target N); CNOT(N -> 0);
// then for n = 2..N: CRY(2 th_n, N -> n-1); CNOT(n-1 -> N). The first pair
// is oriented opposite to the rest; of the four orientation combinations,
// this is the only one whose final excitation probabilities equal c_n^2.
CircuitIR build_circuit(const AngleVector& angles);

// OpenQASM 2.0 text, one statement per line, no trailing whitespace.
// Controlled rotations are emitted as cu3(<angle>,0,0); angles use the
// shortest decimal form that round-trips to the same double.
std::string export_qasm(const CircuitIR& circuit, bool with_measurement);

}  // namespace tc::circuit
