#pragma once

#include <string>

namespace lfca::cli {

/// Shortest decimal that round-trips to the same double; "inf", "-inf", "nan"
/// for non-finite values.
[[nodiscard]] std::string format_double(double x);

}  // namespace lfca::cli
