#pragma once

#include <vector>

#include "fpf/ideal.hpp"
#include "fpf/laurent.hpp"

namespace fpf {

/// Generator count up to which the numerator is computed by plain inclusion-exclusion.
inline constexpr std::size_t inclusion_exclusion_limit = 12;

/// Numerator N(t) of the Hilbert series N(t) / prod(1 - t^weight) of the monomials
/// outside `ideal`.  Works for any monomial ideal (zero-dimensional or not).
LaurentPolynomialZ staircase_numerator(const MonomialIdeal& ideal, const Grading& g);

/// Number of standard monomials in each degree (index = degree) of a
/// zero-dimensional monomial ideal.  Empty for the unit ideal.
std::vector<BigInt> staircase_counts(const MonomialIdeal& ideal, const Grading& g);

/// Independent oracle: walks every monomial of the bounding box and tests divisibility.
/// Throws structural_error when the staircase is unbounded.
std::vector<BigInt> enumeration_oracle(const MonomialIdeal& ideal, const Grading& g);

/// Power-series quotient numerator / prod(1 - t^weight), required to be a polynomial.
/// Throws invariant_error if it is not.
std::vector<BigInt> divide_by_weight_denominator(const LaurentPolynomialZ& numerator, const Grading& g);

}  // namespace fpf
