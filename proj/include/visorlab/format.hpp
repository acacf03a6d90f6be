#pragma once

#include <string>

namespace visorlab {

/// printf-style "%.<decimals>f", with values that round to zero printed without a sign.
std::string format_fixed(double value, int decimals);

/// printf-style "%.<digits>g".
std::string format_general(double value, int digits);

}  // namespace visorlab
