#pragma once

#include <string>
#include <vector>

#include "relspin/linalg.hpp"

namespace relspin::cli {

/// Locale-independent rendering with 17 significant digits.
std::string format_real(real v);

/// Comma-joined values terminated by a newline.
std::string csv_row(const std::vector<real>& values);

} // namespace relspin::cli
