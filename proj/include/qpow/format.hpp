#pragma once

#include <string>

namespace qpow {

/// Decimal text with `digits` significant digits ("%.12g"). Negative zero prints as 0.
std::string format_number(double value, int digits = 12);

}  // namespace qpow
