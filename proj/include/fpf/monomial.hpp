#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fpf {

/// Exponents of a monomial, one entry per variable in declaration order.
using ExponentVector = std::vector<std::uint32_t>;

/// Positive integer degree of each variable.
class Grading {
 public:
  explicit Grading(std::vector<std::uint32_t> weights);

  std::size_t var_count() const noexcept { return weights_.size(); }
  std::uint32_t weight(std::size_t i) const { return weights_.at(i); }
  std::span<const std::uint32_t> weights() const noexcept { return weights_; }
  /// Sum of all weights.
  std::int64_t weight_sum() const noexcept;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::vector<std::uint32_t> weights_;
};

/// Sum of e_j * weight_j.  Throws structural_error on length mismatch,
/// std::overflow_error if the degree does not fit in 63 bits.
std::int64_t weighted_degree(const ExponentVector& m, const Grading& g);

/// Componentwise maximum.
ExponentVector monomial_lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector monomial_mul(const ExponentVector& a, const ExponentVector& b);
/// a / b, requires divides(b, a).
ExponentVector monomial_div(const ExponentVector& a, const ExponentVector& b);
/// True iff `divisor` divides `m` componentwise.
bool divides(const ExponentVector& divisor, const ExponentVector& m);
/// Every exponent multiplied by `factor` (overflow checked).
ExponentVector monomial_scale(const ExponentVector& m, std::uint64_t factor);
bool is_one(const ExponentVector& m) noexcept;
/// Index of the single variable of a pure power X_i^k (k >= 1), or -1.
int pure_power_variable(const ExponentVector& m) noexcept;

/// Weighted graded reverse-lexicographic order: weighted degree first, then the
/// monomial with the smaller exponent in the last differing variable is larger.
class TermOrder {
 public:
  explicit TermOrder(Grading grading) : grading_(std::move(grading)) {}

  const Grading& grading() const noexcept { return grading_; }
  /// Negative, zero or positive as a <, =, > b.
  int compare(const ExponentVector& a, const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  Grading grading_;
};

}  // namespace fpf
