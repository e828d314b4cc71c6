#include "fpf/cli/y_grid.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "fpf/errors.hpp"
#include "fpf/properties.hpp"

namespace fpf::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Reads a signed decimal at `pos`; returns false when none is present.
bool read_number(const std::string& s, std::size_t& pos, double& out) {
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  pos += static_cast<std::size_t>(end - begin);
  return true;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw parse_error("empty complex number");
  auto bad = [&] { return parse_error("malformed complex number '" + s + "'"); };
  std::size_t pos = 0;
  double first = 0;
  // bare "i", "+i", "-i"
  if (s == "i" || s == "+i") return {0, 1};
  if (s == "-i") return {0, -1};
  if (!read_number(s, pos, first)) throw bad();
  if (pos == s.size()) return {first, 0};
  if (s[pos] == 'i' && pos + 1 == s.size()) return {0, first};
  if (s[pos] != '+' && s[pos] != '-') throw bad();
  double second = 0;
  if (s.compare(pos, std::string::npos, "+i") == 0) return {first, 1};
  if (s.compare(pos, std::string::npos, "-i") == 0) return {first, -1};
  if (!read_number(s, pos, second)) throw bad();
  if (pos + 1 != s.size() || s[pos] != 'i') throw bad();
  return {first, second};
}

std::vector<std::complex<double>> parse_y_grid(std::string_view spec) {
  const std::string s = trim(spec);
  if (s.empty()) return {};
  if (s.find(':') != std::string::npos) {
    const auto a = s.find(':');
    const auto b = s.find(':', a + 1);
    if (b == std::string::npos) throw parse_error("y grid '" + s + "' must be min:max:count");
    const auto lo = parse_complex(s.substr(0, a));
    const auto hi = parse_complex(s.substr(a + 1, b - a - 1));
    if (lo.imag() != 0 || hi.imag() != 0) throw parse_error("y grid range endpoints must be real");
    const std::string count_text = trim(s.substr(b + 1));
    char* end = nullptr;
    const long count = std::strtol(count_text.c_str(), &end, 10);
    if (count_text.empty() || *end != '\0' || count < 0) throw parse_error("y grid count must be a nonnegative integer");
    return real_grid(lo.real(), hi.real(), static_cast<unsigned>(count));
  }
  std::vector<std::complex<double>> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(parse_complex(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace fpf::cli
