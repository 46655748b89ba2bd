#pragma once

#include <string>

namespace induction {

/// Shortest decimal string that parses back to the same double; "inf", "-inf"
/// and "nan" for non-finite values.
std::string format_double(double x);

}  // namespace induction
