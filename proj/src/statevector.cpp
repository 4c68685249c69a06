#include "tc/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tc/errors.hpp"

namespace tc::sim {
namespace {

void check_qubit(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw IndexOutOfRange("apply_gate: qubit index out of range");
    }
}

struct SplitMix64 {
    std::uint64_t s;

    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

constexpr std::uint64_t kCheapMultiplier = 0xda942042e4dd58b5ULL;

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
    SplitMix64 expander{seed};
    const auto initstate = (static_cast<unsigned __int128>(expander.next()) << 64) |
                           expander.next();
    const auto initseq = (static_cast<unsigned __int128>(expander.next()) << 64) |
                         expander.next();
    inc_ = (initseq << 1) | 1;
    state_ = 0;
    next_u64();
    state_ += initstate;
    next_u64();
}

std::uint64_t RandomStream::next_u64() {
    // DXSM output of the pre-iterated state, then the cheap-multiplier step.
    std::uint64_t hi = static_cast<std::uint64_t>(state_ >> 64);
    const std::uint64_t lo = static_cast<std::uint64_t>(state_) | 1;
    hi ^= hi >> 32;
    hi *= kCheapMultiplier;
    hi ^= hi >> 48;
    hi *= lo;
    state_ = state_ * kCheapMultiplier + inc_;
    return hi;
}

StateVector zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw SizeLimitExceeded("zero_state: n_qubits must be in [1, 26]");
    }
    StateVector state;
    state.n_qubits = n_qubits;
    state.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
    state.amplitudes[0] = 1.0;
    return state;
}

void apply_gate(StateVector& state, const circuit::Gate& gate) {
    using Kind = circuit::Gate::Kind;
    auto& amp = state.amplitudes;
    const Eigen::Index dim = amp.size();

    switch (gate.kind) {
        case Kind::pauli_x: {
            check_qubit(state, gate.target);
            const Eigen::Index bit = Eigen::Index{1} << gate.target;
            for (Eigen::Index base = 0; base < dim; base += 2 * bit) {
                for (Eigen::Index low = 0; low < bit; ++low) {
                    std::swap(amp[base + low], amp[base + low + bit]);
                }
            }
            break;
        }
        case Kind::controlled_ry: {
            check_qubit(state, gate.control);
            check_qubit(state, gate.target);
            const Eigen::Index cbit = Eigen::Index{1} << gate.control;
            const Eigen::Index tbit = Eigen::Index{1} << gate.target;
            const double c = std::cos(0.5 * gate.angle);
            const double s = std::sin(0.5 * gate.angle);
            for (Eigen::Index i = 0; i < dim; ++i) {
                if ((i & cbit) != 0 && (i & tbit) == 0) {
                    const std::complex<double> a0 = amp[i];
                    const std::complex<double> a1 = amp[i + tbit];
                    amp[i] = c * a0 - s * a1;
                    amp[i + tbit] = s * a0 + c * a1;
                }
            }
            break;
        }
        case Kind::cnot: {
            check_qubit(state, gate.control);
            check_qubit(state, gate.target);
            const Eigen::Index cbit = Eigen::Index{1} << gate.control;
            const Eigen::Index tbit = Eigen::Index{1} << gate.target;
            for (Eigen::Index i = 0; i < dim; ++i) {
                if ((i & cbit) != 0 && (i & tbit) == 0) {
                    std::swap(amp[i], amp[i + tbit]);
                }
            }
            break;
        }
    }
}

StateVector run_circuit(const circuit::CircuitIR& circuit) {
    StateVector state = zero_state(circuit.n_qubits);
    for (const auto& gate : circuit.gates) {
        apply_gate(state, gate);
    }
    return state;
}

Eigen::VectorXd excitation_probabilities(const StateVector& state) {
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(state.n_qubits);
    const Eigen::Index dim = state.amplitudes.size();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double p = std::norm(state.amplitudes[i]);
        if (p == 0.0) {
            continue;
        }
        for (int b = 0; b < state.n_qubits; ++b) {
            if ((i >> b) & 1) {
                probs[b] += p;
            }
        }
    }
    return probs;
}

ShotHistogram sample_counts(const StateVector& state, std::uint64_t shots,
                            std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("sample_counts: shots must be >= 1");
    }
    const Eigen::Index dim = state.amplitudes.size();
    std::vector<double> cdf(static_cast<std::size_t>(dim));
    double total = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        total += std::norm(state.amplitudes[i]);
        cdf[static_cast<std::size_t>(i)] = total;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("sample_counts: state is not normalized");
    }
    // Guarantee every u in [0,1) lands inside the table.
    cdf.back() = std::max(cdf.back(), 1.0);

    RandomStream rng(seed);
    ShotHistogram histogram;
    histogram.shots = shots;
    histogram.seed = seed;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform01();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto outcome = static_cast<std::uint64_t>(it - cdf.begin());
        ++histogram.counts[outcome];
    }
    return histogram;
}

double onehot_residual(const StateVector& state) {
    double residual = 0.0;
    const Eigen::Index dim = state.amplitudes.size();
    for (Eigen::Index i = 1; i < dim; ++i) {
        if ((i & (i - 1)) != 0) {  // not a power of two
            residual += std::norm(state.amplitudes[i]);
        }
    }
    return residual;
}

}  // namespace tc::sim
