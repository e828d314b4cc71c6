#include "fpf/staircase.hpp"

#include <algorithm>

#include "fpf/errors.hpp"
#include "fpf/kernels.hpp"

namespace fpf {

namespace {

constexpr std::size_t enumeration_volume_limit = 50'000'000;

LaurentPolynomialZ from_int64(const std::vector<std::int64_t>& c) {
  std::vector<BigInt> big(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) big[k] = static_cast<long>(c[k]);
  return LaurentPolynomialZ(0, std::move(big));
}

// N(M) = N(M') - t^deg(m) N(M' : m) with m the last generator.
LaurentPolynomialZ pivot_numerator(std::vector<ExponentVector> gens, const Grading& g) {
  if (gens.size() <= inclusion_exclusion_limit) return from_int64(kernels::inclusion_exclusion_numerator(gens, g));
  ExponentVector pivot = std::move(gens.back());
  gens.pop_back();
  std::vector<ExponentVector> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) {
    ExponentVector c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i] > pivot[i] ? m[i] - pivot[i] : 0;
    colon.push_back(std::move(c));
  }
  const MonomialIdeal colon_ideal(g.var_count(), std::move(colon));
  const auto shifted = LaurentPolynomialZ::monomial(weighted_degree(pivot, g)) *
                       pivot_numerator(colon_ideal.generators(), g);
  return pivot_numerator(std::move(gens), g) - shifted;
}

std::size_t box_volume(const ExponentVector& box) {
  std::size_t v = 1;
  for (auto b : box)
    if (__builtin_mul_overflow(v, static_cast<std::size_t>(b), &v)) return static_cast<std::size_t>(-1);
  return v;
}

std::vector<BigInt> to_big(const std::vector<std::int64_t>& c) {
  std::vector<BigInt> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = static_cast<long>(c[k]);
  return out;
}

}  // namespace

LaurentPolynomialZ staircase_numerator(const MonomialIdeal& ideal, const Grading& g) {
  if (ideal.var_count() != g.var_count()) throw structural_error("staircase_numerator: grading length mismatch");
  return pivot_numerator(ideal.generators(), g);
}

std::vector<BigInt> divide_by_weight_denominator(const LaurentPolynomialZ& numerator, const Grading& g) {
  if (numerator.is_zero()) return {};
  if (numerator.low_degree() < 0) throw invariant_error("staircase: numerator has negative exponents");
  const auto top = static_cast<std::size_t>(numerator.high_degree());
  std::vector<BigInt> series(top + 1);
  for (std::size_t k = 0; k <= top; ++k) series[k] = numerator.coeff(static_cast<long>(k));
  for (auto w : g.weights())
    for (std::size_t k = w; k <= top; ++k) series[k] += series[k - w];
  const auto denom_degree = static_cast<std::size_t>(g.weight_sum());
  if (top < denom_degree) throw invariant_error("staircase: Hilbert series is not a polynomial (ideal not zero-dimensional)");
  const std::size_t degree = top - denom_degree;
  for (std::size_t k = degree + 1; k <= top; ++k)
    if (series[k] != 0) throw invariant_error("staircase: Hilbert series is not a polynomial (ideal not zero-dimensional)");
  series.resize(degree + 1);
  while (!series.empty() && series.back() == 0) series.pop_back();
  return series;
}

std::vector<BigInt> staircase_counts(const MonomialIdeal& ideal, const Grading& g) {
  if (ideal.var_count() != g.var_count()) throw structural_error("staircase_counts: grading length mismatch");
  if (ideal.is_unit()) return {};
  if (!ideal.is_zero_dimensional()) throw structural_error("staircase_counts: ideal is not zero-dimensional");
  const auto& gens = ideal.generators();
  if (gens.size() <= inclusion_exclusion_limit)
    return divide_by_weight_denominator(from_int64(kernels::inclusion_exclusion_numerator(gens, g)), g);
  const auto box = ideal.bounding_box();
  if (box_volume(box) <= enumeration_volume_limit) return to_big(kernels::enumerate_staircase(gens, g, box));
  return divide_by_weight_denominator(staircase_numerator(ideal, g), g);
}

std::vector<BigInt> enumeration_oracle(const MonomialIdeal& ideal, const Grading& g) {
  if (ideal.var_count() != g.var_count()) throw structural_error("enumeration_oracle: grading length mismatch");
  if (!ideal.is_zero_dimensional()) throw structural_error("enumeration_oracle: staircase is unbounded");
  if (ideal.is_unit()) return {};
  const auto box = ideal.bounding_box();
  if (box_volume(box) > enumeration_volume_limit) throw structural_error("enumeration_oracle: bounding box too large");
  return to_big(kernels::enumerate_staircase(ideal.generators(), g, box));
}

}  // namespace fpf
