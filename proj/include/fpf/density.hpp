#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fpf/problem.hpp"

namespace fpf {

/// Step function g_n(x) = p^(-n(d-1)) l_j on [j/p^n, (j+1)/p^n).
struct DensityTable {
  unsigned n = 0;
  std::uint32_t p = 2;
  unsigned d = 1;
  std::vector<BigInt> lengths;

  BigInt q() const;
  Rational value(std::size_t j) const;
  Rational x(std::size_t j) const;
  /// integral of g_n = p^(-n) sum_j g_n(j/p^n)
  Rational mass() const;
  /// g_n at an arbitrary real x (0 outside the support).
  double at(double x) const;
};

/// Throws unsupported_error when d = 0.
DensityTable density_table(const ProblemSpec& P, unsigned n);

/// F_n(y) (1 - e^{-iy/p^n}) / (iy/p^n), and F_n(0) at y = 0.
std::complex<double> gn_fourier_exact(const ProblemSpec& P, unsigned n, std::complex<double> y);

/// Integral of g_n(x) e^{-iyx} computed interval by interval.
std::complex<double> quadrature_fourier(const DensityTable& t, std::complex<double> y);

/// Columns x, g_n_of_x, j, ell_j; one row per nonzero length.
std::string density_csv(const DensityTable& t);

}  // namespace fpf
