#include "qpow/format.hpp"

#include <cstdio>

namespace qpow {

std::string format_number(double value, int digits) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

}  // namespace qpow
