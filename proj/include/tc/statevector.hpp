// Dense exact statevector execution of the gate IR, per-qubit marginals,
// and seeded shot sampling.
#pragma once

#include <cstdint>
#include <map>

#include <Eigen/Dense>

#include "tc/circuit.hpp"

namespace tc::sim {

// 2^26 complex amplitudes (~1 GiB) is the hard memory guard.
inline constexpr int kMaxQubits = 26;

// Basis convention: bit b of an amplitude index gives the state of qubit b.
struct StateVector {
    int n_qubits = 0;
    Eigen::VectorXcd amplitudes;
};

StateVector zero_state(int n_qubits);

// In-place gate application; O(2^n) bitmask kernels.
void apply_gate(StateVector& state, const circuit::Gate& gate);

// zero_state followed by every gate in order.
StateVector run_circuit(const circuit::CircuitIR& circuit);

// Entry b = total probability of basis states with bit b set.
Eigen::VectorXd excitation_probabilities(const StateVector& state);

struct ShotHistogram {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // basis index -> count
};

// Deterministic 64-bit uniform stream: a PCG64DXSM core (128-bit LCG with
// the cheap multiplier and DXSM output permutation) whose state and stream
// constants are expanded from the seed with SplitMix64. Everything is
// fixed-width integer arithmetic, so the sequence is identical on every
// platform; raw draws map to [0,1) as (x >> 11) * 2^-53.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t next_u64();

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    unsigned __int128 state_ = 0;
    unsigned __int128 inc_ = 0;
};

// Draws `shots` outcomes from |amplitude|^2 by inverse-CDF bisection over
// the cumulative distribution. Identical (state, shots, seed) give
// byte-identical histograms.
ShotHistogram sample_counts(const StateVector& state, std::uint64_t shots,
                            std::uint64_t seed);

// Probability mass on basis states that are neither one-hot (exactly one
// qubit excited) nor the all-zero state. The all-zero mass itself is
// state.amplitudes[0]; callers check it separately.
double onehot_residual(const StateVector& state);

}  // namespace tc::sim
