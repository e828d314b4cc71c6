#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fpf/graded_lengths.hpp"
#include "fpf/poly_parser.hpp"

namespace fpf::test {

inline Polynomial poly(const PolyRingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline std::vector<Polynomial> polys(const PolyRingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

inline std::vector<BigInt> big(const std::vector<long>& v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline const std::complex<double> I(0.0, 1.0);

// (1 - e^{-ihy}) / (iy)
inline std::complex<double> phi(std::complex<double> y, double h = 1.0) { return (1.0 - std::exp(-I * h * y)) / (I * y); }

}  // namespace fpf::test
