#pragma once

#include <string>

namespace sentifiers {

/// Display form, ten significant digits ("4.9", "60", "71.35", "1e-07").
/// Payload values keep full precision; this is only for prose.
std::string format_number(double value);

/// "[lo, hi]"
std::string format_range(double lo, double hi);

}  // namespace sentifiers
