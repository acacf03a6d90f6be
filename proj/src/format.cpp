#include "visorlab/format.hpp"

#include <array>
#include <cstdio>

namespace visorlab {

std::string format_fixed(double value, int decimals) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals, value);
    std::string s(buf.data());
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

std::string format_general(double value, int digits) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*g", digits, value == 0.0 ? 0.0 : value);
    return buf.data();
}

}  // namespace visorlab
