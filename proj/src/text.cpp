#include "sentifiers/text.hpp"

#include <charconv>
#include <system_error>

namespace sentifiers {

std::string format_number(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 10);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string format_range(double lo, double hi) {
  return "[" + format_number(lo) + ", " + format_number(hi) + "]";
}

}  // namespace sentifiers
