#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fpf/graded_lengths.hpp"
#include "fpf/ideal.hpp"
#include "fpf/laurent.hpp"

namespace fpf {

/// numerator(t) / prod_i (1 - t^denominator_degrees[i]).  The degrees are kept sorted.
struct HilbertSeries {
  LaurentPolynomialZ numerator;
  std::vector<std::uint32_t> denominator_degrees;

  HilbertSeries() = default;
  HilbertSeries(LaurentPolynomialZ num, std::vector<std::uint32_t> den);

  /// Cancels every (1 - t^d) of the denominator that divides the numerator.
  HilbertSeries reduce() const;
  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Hilbert series of R, via the initial ideal of its relations.  Not reduced.
HilbertSeries series_of_ring(const RingPresentation& R);

/// sum_j lengths[j] t^j with an empty denominator.
HilbertSeries series_of_table(const GradedLengthTable& t);

/// Hilbert series of the residue field k = R / R_+: the constant 1.
HilbertSeries residue_field_series();

struct SamuelData {
  unsigned dimension = 0;
  Rational multiplicity;
};

/// Dimension and multiplicity lim (1-t)^d H(t), by exact division of the numerator by (1 - t).
SamuelData hilbert_samuel(const HilbertSeries& h);

/// H_M * H_N / H_R as an exact rational function.  Throws invariant_error when the
/// numerator of H_R neither divides exactly nor splits into (1 - t^e) factors.
HilbertSeries chi_series(const HilbertSeries& m, const HilbertSeries& n, const HilbertSeries& r);

HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b);

/// numerator(z) / prod (1 - z^d).  Throws std::domain_error for |z| >= 1 with a denominator.
std::complex<double> eval_series(const HilbertSeries& h, std::complex<double> z);

/// a and b are equal as rational functions (cross-multiplied, exact).
bool same_rational_function(const HilbertSeries& a, const HilbertSeries& b);

}  // namespace fpf
