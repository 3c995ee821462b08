#pragma once

#include <string>
#include <vector>

namespace logitdyn::cli {

/// Formats a double with 12 significant digits (the output-file contract);
/// negative zero is normalized to "0".
std::string format_value(double x);

/// Splits one CSV line on commas. No quoting; none of our outputs need it.
std::vector<std::string> split_fields(const std::string& line);

}  // namespace logitdyn::cli
