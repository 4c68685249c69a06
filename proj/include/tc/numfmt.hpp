// Deterministic float-to-text helpers shared by the emitters.
#pragma once

#include <string>

namespace tc {

// Shortest decimal form that round-trips to the same double ("1.5", "0",
// "0.9272952180016122"). Negative zero renders as "0".
std::string shortest_double(double value);

// Up to 12 significant digits, shortest form within that budget (CSV cells).
std::string csv_double(double value);

}  // namespace tc
