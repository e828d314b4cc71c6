#pragma once

#include <optional>
#include <vector>

#include "fpf/polynomial.hpp"

namespace fpf {

/// Graded algebra F_p[X_1..X_m] / (relations).  Relations are homogeneous of
/// positive weighted degree; an empty list is the weighted polynomial ring.
class RingPresentation {
 public:
  explicit RingPresentation(PolyRingPtr ring, std::vector<Polynomial> relations = {});

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  std::uint32_t prime() const noexcept { return ring_->field.characteristic(); }
  const Grading& grading() const noexcept { return ring_->grading; }

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> relations_;
};

/// Ideal of a RingPresentation given by homogeneous generators.
class HomogeneousIdeal {
 public:
  explicit HomogeneousIdeal(std::vector<Polynomial> generators);

  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const PolyRingPtr& ring() const noexcept { return generators_.front().ring(); }

 private:
  std::vector<Polynomial> generators_;
};

/// Monomial ideal with generators minimal under divisibility, sorted ascending in
/// the term order.  The unit ideal is represented by the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t var_count, std::vector<ExponentVector> generators);

  std::size_t var_count() const noexcept { return var_count_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  bool is_unit() const noexcept;
  bool contains(const ExponentVector& m) const;
  /// Smallest k with X_var^k in the ideal.
  std::optional<std::uint32_t> pure_power(std::size_t var) const;
  /// Every variable has a pure power, i.e. the staircase is finite.
  bool is_zero_dimensional() const;
  /// Exclusive exponent bounds of the staircase (requires zero-dimensional).
  ExponentVector bounding_box() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t var_count_;
  std::vector<ExponentVector> generators_;
};

/// Generators replaced by their p^n-th powers; over F_p this scales exponents by p^n.
HomogeneousIdeal bracket_power(const HomogeneousIdeal& ideal, unsigned n);

/// p^n with overflow check.
std::uint64_t prime_power(std::uint32_t p, unsigned n);

}  // namespace fpf
