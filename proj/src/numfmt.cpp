#include "tc/numfmt.hpp"

#include <charconv>
#include <cstdio>

namespace tc {

std::string shortest_double(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

std::string csv_double(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[32];
    const int len = std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace tc
