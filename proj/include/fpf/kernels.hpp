#pragma once

// Data-parallel inner loops.  The top-level functions run under OpenMP; the
// `serial` namespace holds the straightforward reference versions used by the
// tests and the benchmark to check and time the parallel ones.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fpf/monomial.hpp"

namespace fpf::kernels {

/// Largest generator count accepted by the inclusion-exclusion kernels.
inline constexpr std::size_t max_inclusion_exclusion_generators = 24;

/// Coefficients (index = degree) of sum over subsets S of (-1)^|S| t^deg(lcm S):
/// the numerator of the Hilbert series of the monomials outside the ideal.
std::vector<std::int64_t> inclusion_exclusion_numerator(std::span<const ExponentVector> gens, const Grading& g);

/// Counts by degree of the monomials with exponents below `box` that no generator divides.
std::vector<std::int64_t> enumerate_staircase(std::span<const ExponentVector> gens, const Grading& g,
                                              const ExponentVector& box);

/// For each y: sum_j coeffs[j] * exp(-i * y * j * step).
std::vector<std::complex<double>> exponential_sum(std::span<const double> coeffs, double step,
                                                  std::span<const std::complex<double>> ys);

namespace serial {

/// Memoized lcm over subsets (lcm(S) from lcm(S minus its lowest element)).
std::vector<std::int64_t> inclusion_exclusion_numerator(std::span<const ExponentVector> gens, const Grading& g);
std::vector<std::int64_t> enumerate_staircase(std::span<const ExponentVector> gens, const Grading& g,
                                              const ExponentVector& box);
std::vector<std::complex<double>> exponential_sum(std::span<const double> coeffs, double step,
                                                  std::span<const std::complex<double>> ys);

}  // namespace serial

}  // namespace fpf::kernels
