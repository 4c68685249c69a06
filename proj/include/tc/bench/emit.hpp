// Deterministic text emitters for sweep reports. Identical reports yield
// byte-identical output; nothing here depends on time, locale, or platform.
#pragma once

#include <string>

#include "tc/bench/sweep.hpp"

namespace tc::bench {

// Header `t,backend,p_s1,...,p_sN,p_env`; one row per (grid point, backend),
// sorted by backend name then t; floats use up to 12 significant digits in
// shortest form; newline-terminated.
std::string emit_csv(const SweepReport& report);

// Mirrors the report fields (spec, time_grid, series, max_abs_diff).
// Wall-clock timings are intentionally excluded: output bytes must not
// depend on the machine.
std::string emit_json(const SweepReport& report);

// Standalone 800x500 SVG: one polyline per (backend, population channel),
// axes with tick labels, legend. No timestamps or generated IDs.
std::string emit_svg(const SweepReport& report);

}  // namespace tc::bench
