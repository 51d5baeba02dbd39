#pragma once

#include <string>

namespace hedgesim {

/// 12 significant digits, '.' decimal separator, no grouping ("%.12g").
std::string format_number(double value);

/// `value` rounded to 12 significant digits.
double round12(double value);

/// Shortest text that parses back to exactly `value` ("%.17g" at most).
std::string format_exact(double value);

}  // namespace hedgesim
