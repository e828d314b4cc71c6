#include "fpf/cli/format.hpp"

namespace fpf::cli {

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    out += f;
    first = false;
  }
  out += '\n';
  return out;
}

std::string format_re(std::complex<double> z) { return format_double(z.real()); }
std::string format_im(std::complex<double> z) { return format_double(z.imag()); }

}  // namespace fpf::cli
