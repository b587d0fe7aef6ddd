#pragma once

#include <string>

namespace graphsim {

/// Shortest decimal string that round-trips to the same double
/// (std::to_chars general format). Used everywhere a float is written
/// to CSV or metadata so reruns are byte-identical.
std::string format_double(double value);

} // namespace graphsim
