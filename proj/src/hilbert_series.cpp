#include "fpf/hilbert_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "fpf/errors.hpp"
#include "fpf/groebner.hpp"
#include "fpf/staircase.hpp"

namespace fpf {

HilbertSeries::HilbertSeries(LaurentPolynomialZ num, std::vector<std::uint32_t> den)
    : numerator(std::move(num)), denominator_degrees(std::move(den)) {
  for (auto d : denominator_degrees)
    if (d == 0) throw structural_error("hilbert series: denominator degree must be positive");
  std::sort(denominator_degrees.begin(), denominator_degrees.end());
}

HilbertSeries HilbertSeries::reduce() const {
  LaurentPolynomialZ num = numerator;
  std::vector<std::uint32_t> kept;
  if (num.is_zero()) return HilbertSeries(num, {});
  for (auto d : denominator_degrees) {
    if (auto q = num.exact_divide(LaurentPolynomialZ::one_minus_t_pow(d))) {
      num = std::move(*q);
    } else {
      kept.push_back(d);
    }
  }
  return HilbertSeries(std::move(num), std::move(kept));
}

std::string HilbertSeries::to_string() const {
  std::string s = "(" + numerator.to_string() + ")";
  if (denominator_degrees.empty()) return s;
  s += " / (";
  for (std::size_t i = 0; i < denominator_degrees.size(); ++i) {
    if (i) s += "*";
    s += "(1 - t^" + std::to_string(denominator_degrees[i]) + ")";
  }
  return s + ")";
}

HilbertSeries series_of_ring(const RingPresentation& R) {
  const auto weights = R.grading().weights();
  std::vector<std::uint32_t> den(weights.begin(), weights.end());
  if (R.relations().empty()) return HilbertSeries(LaurentPolynomialZ::constant(1), std::move(den));
  const MonomialIdeal in = initial_ideal(buchberger(R.relations()));
  return HilbertSeries(staircase_numerator(in, R.grading()), std::move(den));
}

HilbertSeries series_of_table(const GradedLengthTable& t) { return HilbertSeries(LaurentPolynomialZ(0, t.lengths), {}); }

HilbertSeries residue_field_series() { return HilbertSeries(LaurentPolynomialZ::constant(1), {}); }

SamuelData hilbert_samuel(const HilbertSeries& h) {
  if (h.numerator.is_zero()) return {0, Rational(0)};
  LaurentPolynomialZ q = h.numerator;
  std::size_t divisions = 0;
  const auto one_minus_t = LaurentPolynomialZ::one_minus_t_pow(1);
  while (q.value_at_one() == 0) {
    auto next = q.exact_divide(one_minus_t);
    if (!next) throw invariant_error("hilbert_samuel: numerator vanishes at 1 but (1 - t) does not divide it");
    q = std::move(*next);
    ++divisions;
  }
  if (divisions > h.denominator_degrees.size())
    throw invariant_error("hilbert_samuel: series has a zero at t = 1 (not a Hilbert series)");
  BigInt denom = 1;
  for (auto d : h.denominator_degrees) denom *= d;
  Rational e(q.value_at_one(), denom);
  e.canonicalize();
  return {static_cast<unsigned>(h.denominator_degrees.size() - divisions), e};
}

HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
  auto den = a.denominator_degrees;
  den.insert(den.end(), b.denominator_degrees.begin(), b.denominator_degrees.end());
  return HilbertSeries(a.numerator * b.numerator, std::move(den));
}

namespace {

// p = sign * t^shift * prod (1 - t^e) with the e's returned, or nullopt.
struct SplitProduct {
  int sign;
  long shift;
  std::vector<std::uint32_t> degrees;
};

std::optional<SplitProduct> split_into_cyclotomic_factors(const LaurentPolynomialZ& p) {
  if (p.is_zero()) return std::nullopt;
  SplitProduct out{1, p.low_degree(), {}};
  LaurentPolynomialZ rest = p * LaurentPolynomialZ::monomial(-p.low_degree());
  if (rest.coeff(0) == -1) {
    out.sign = -1;
    rest = -rest;
  }
  if (rest.coeff(0) != 1) return std::nullopt;
  while (rest.high_degree() > 0) {
    long e = 1;
    while (rest.coeff(e) == 0) ++e;
    if (rest.coeff(e) > 0) return std::nullopt;
    auto q = rest.exact_divide(LaurentPolynomialZ::one_minus_t_pow(e));
    if (!q) return std::nullopt;
    rest = std::move(*q);
    out.degrees.push_back(static_cast<std::uint32_t>(e));
  }
  return out;
}

}  // namespace

HilbertSeries chi_series(const HilbertSeries& m, const HilbertSeries& n, const HilbertSeries& r) {
  if (r.numerator.is_zero()) throw invariant_error("chi_series: H_R is zero");
  LaurentPolynomialZ top = m.numerator * n.numerator;
  for (auto d : r.denominator_degrees) top = top.times_one_minus_t_pow(d);
  auto den = m.denominator_degrees;
  den.insert(den.end(), n.denominator_degrees.begin(), n.denominator_degrees.end());
  if (auto q = top.exact_divide(r.numerator)) return HilbertSeries(std::move(*q), std::move(den)).reduce();

  const auto split = split_into_cyclotomic_factors(r.numerator);
  if (!split) throw invariant_error("chi_series: numerator of H_R does not divide H_M * H_N * denominator(H_R)");
  den.insert(den.end(), split->degrees.begin(), split->degrees.end());
  top = top * LaurentPolynomialZ::monomial(-split->shift, split->sign);
  return HilbertSeries(std::move(top), std::move(den)).reduce();
}

std::complex<double> eval_series(const HilbertSeries& h, std::complex<double> z) {
  if (!h.denominator_degrees.empty() && std::abs(z) >= 1.0)
    throw std::domain_error("eval_series: |z| >= 1 with a nonempty denominator");
  std::complex<double> den = 1.0;
  for (auto d : h.denominator_degrees) {
    std::complex<double> zd = 1.0;
    for (std::uint32_t k = 0; k < d; ++k) zd *= z;
    den *= 1.0 - zd;
  }
  return h.numerator.eval(z) / den;
}

bool same_rational_function(const HilbertSeries& a, const HilbertSeries& b) {
  LaurentPolynomialZ lhs = a.numerator;
  for (auto d : b.denominator_degrees) lhs = lhs.times_one_minus_t_pow(d);
  LaurentPolynomialZ rhs = b.numerator;
  for (auto d : a.denominator_degrees) rhs = rhs.times_one_minus_t_pow(d);
  return lhs == rhs;
}

}  // namespace fpf
