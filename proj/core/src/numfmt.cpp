#include "hedgesim/numfmt.hpp"

#include <cstdio>
#include <cstdlib>

namespace hedgesim {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round12(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string format_exact(double value) {
  char buf[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

}  // namespace hedgesim
