#pragma once

#include <complex>
#include <initializer_list>
#include <string>

#include "fpf/number_format.hpp"

namespace fpf::cli {

/// Fields joined by commas, newline-terminated.  Fields are written verbatim.
std::string csv_row(std::initializer_list<std::string> fields);

std::string format_re(std::complex<double> z);
std::string format_im(std::complex<double> z);

}  // namespace fpf::cli
