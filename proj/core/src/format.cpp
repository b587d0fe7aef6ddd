#include "graphsim/format.hpp"

#include <charconv>
#include <system_error>

namespace graphsim {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

} // namespace graphsim
