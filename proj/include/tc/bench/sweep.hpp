// Time-grid sweeps across backends with pairwise comparison.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tc/analytic.hpp"

namespace tc::bench {

enum class Backend { analytic, circuit, qme, volterra };

std::string to_string(Backend backend);
Backend backend_from_string(const std::string& name);  // throws invalid_argument

struct SweepSpec {
    TCParams params;
    double t_max = 2.0;
    int steps = 101;
    std::vector<Backend> backends;
    std::optional<std::uint64_t> shots;  // circuit backend only
    std::uint64_t seed = 42;

    void validate() const;
};

struct BackendSeries {
    Backend backend;
    std::vector<PopulationVector> series;
    double wall_seconds = 0.0;
};

struct SweepReport {
    SweepSpec spec;  // echoed with backends in canonical order
    std::vector<double> time_grid;
    std::vector<BackendSeries> series;  // same order as spec.backends
    Eigen::MatrixXd max_abs_diff;       // pairwise, over all times and channels
};

// Evaluates every backend on the uniform grid t_i = i t_max/(steps-1).
// The circuit backend rebuilds angles and gates per grid point (each
// circuit prepares the time-t snapshot; nothing is trotterized); with
// shots set, its populations are empirical frequencies sampled with the
// per-point seed (seed XOR i). Deterministic end-to-end for a fixed spec.
SweepReport run_sweep(const SweepSpec& spec);

}  // namespace tc::bench
