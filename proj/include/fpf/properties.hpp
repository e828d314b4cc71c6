#pragma once

// Randomized and suite-wide property checks shared by the test suite, the
// acceptance binary and the `selftest` command.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fpf/suite.hpp"

namespace fpf {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Random zero-dimensional monomial ideals (<= 4 variables, <= 6 generators,
/// exponents <= 6): staircase counts equal the enumeration oracle.
PropertyResult check_staircase_vs_enumeration(unsigned count, std::uint64_t seed);

/// Random homogeneous ideals (<= 3 variables, generator degrees <= 4, p in {2, 3}):
/// graded dimensions from the initial ideal equal the Macaulay rank oracle for j <= max_degree.
PropertyResult check_groebner_vs_macaulay(unsigned count, std::uint64_t seed, std::int64_t max_degree = 12);

/// series_of_table(T_n) equals H_S * betti_alternating_polynomial exactly, for n <= n_max.
PropertyResult check_ab_identity(std::span<const NamedProblem> suite, unsigned n_max);

/// gn_fourier_exact vs quadrature_fourier to `tol`, and ghat_n(0) = F_n(0) exactly.
PropertyResult check_density_bridge(std::span<const NamedProblem> suite, unsigned n_max,
                                    std::span<const std::complex<double>> ys, double tol = 1e-10);

/// F_n(-y) = conj F_n(y) for real y.
PropertyResult check_conjugate_symmetry(std::span<const NamedProblem> suite, std::span<const double> ys,
                                        double tol = 1e-12);

/// sup_y |F_{m+1} - F_m| shrinks by at most 1/p + 0.2 per step for m >= 3.
PropertyResult check_cauchy_decay(std::span<const NamedProblem> suite, std::span<const std::complex<double>> ys);

/// Parallel kernels equal the serial references on random inputs.
PropertyResult check_kernels_agree(unsigned count, std::uint64_t seed);

/// Real grid of `count` points spread evenly over [lo, hi].
std::vector<std::complex<double>> real_grid(double lo, double hi, unsigned count);

}  // namespace fpf
