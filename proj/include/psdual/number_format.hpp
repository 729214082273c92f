#pragma once

#include <charconv>
#include <string>

namespace psdual {

// Shortest decimal form that round-trips to the same double.
inline std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace psdual
