#pragma once

#include <vector>

#include "fpf/groebner.hpp"
#include "fpf/ideal.hpp"
#include "fpf/laurent.hpp"

namespace fpf {

/// lengths[j] = dim_k (R / I^[p^n])_j.  Trailing zeros are trimmed, so
/// max_degree() is the largest j with a nonzero length.
struct GradedLengthTable {
  unsigned n = 0;
  std::uint32_t p = 2;
  std::vector<BigInt> lengths;

  long max_degree() const noexcept { return static_cast<long>(lengths.size()) - 1; }
  BigInt length(long j) const;
  BigInt total() const;
  /// sum_j j^m * lengths[j]
  BigInt moment(unsigned m) const;
  /// q = p^n as an exact integer.
  BigInt q() const;
};

/// Reduced Groebner basis of relations + I^[p^n] in the ambient polynomial ring.
GroebnerBasis frobenius_basis(const RingPresentation& R, const HomogeneousIdeal& I, unsigned n);

/// Support constant C = (largest pure-power exponent of the n = 0 initial ideal + 1) * sum of weights.
std::int64_t support_constant(const RingPresentation& R, const HomogeneousIdeal& I);

/// Exact graded lengths of R / I^[p^n].  Throws colength_error naming the first
/// variable without a pure power in the initial ideal.
GradedLengthTable graded_lengths(const RingPresentation& R, const HomogeneousIdeal& I, unsigned n);

}  // namespace fpf
