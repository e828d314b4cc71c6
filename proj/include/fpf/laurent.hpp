#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace fpf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Finite Laurent polynomial in t with arbitrary-precision integer coefficients.
/// Stored densely from the lowest nonzero exponent; zero has no coefficients.
class LaurentPolynomialZ {
 public:
  LaurentPolynomialZ() = default;
  /// coeffs[k] is the coefficient of t^(low + k).
  LaurentPolynomialZ(long low, std::vector<BigInt> coeffs);

  static LaurentPolynomialZ constant(const BigInt& c) { return monomial(0, c); }
  static LaurentPolynomialZ monomial(long exponent, const BigInt& c = 1);
  /// 1 - t^delta.
  static LaurentPolynomialZ one_minus_t_pow(long delta);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long low_degree() const noexcept { return low_; }
  /// Largest exponent with a nonzero coefficient (low_degree() - 1 for zero).
  long high_degree() const noexcept { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(long exponent) const;
  const std::vector<BigInt>& dense() const noexcept { return coeffs_; }
  std::size_t term_count() const;

  LaurentPolynomialZ operator+(const LaurentPolynomialZ& o) const;
  LaurentPolynomialZ operator-(const LaurentPolynomialZ& o) const;
  LaurentPolynomialZ operator*(const LaurentPolynomialZ& o) const;
  LaurentPolynomialZ operator-() const;
  LaurentPolynomialZ times_one_minus_t_pow(long delta) const;

  /// Exact quotient, or std::nullopt when the divisor does not divide.
  std::optional<LaurentPolynomialZ> exact_divide(const LaurentPolynomialZ& divisor) const;

  BigInt value_at_one() const;
  std::complex<double> eval(std::complex<double> z) const;
  std::string to_string(char var = 't') const;

  friend bool operator==(const LaurentPolynomialZ&, const LaurentPolynomialZ&) = default;

 private:
  void trim();

  long low_ = 0;
  std::vector<BigInt> coeffs_;
};

}  // namespace fpf
