#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace fpf::cli {

/// "min:max:count" (real axis, evenly spaced) or a comma-separated list of complex
/// literals such as "1", "-0.5", "2i", "1.5-0.25i".  An empty string is an empty grid.
std::vector<std::complex<double>> parse_y_grid(std::string_view spec);

/// One complex literal.
std::complex<double> parse_complex(std::string_view text);

}  // namespace fpf::cli
