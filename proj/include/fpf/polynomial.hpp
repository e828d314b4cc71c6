#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpf/monomial.hpp"
#include "fpf/prime_field.hpp"

namespace fpf {

/// Ambient weighted polynomial ring F_p[X_1..X_m] with weighted grevlex order.
struct PolyRing {
  PolyRing(PrimeField field, Grading grading, std::vector<std::string> names);

  PrimeField field;
  Grading grading;
  TermOrder order;
  std::vector<std::string> names;

  std::size_t var_count() const noexcept { return grading.var_count(); }
  /// Same field and grading (variable names are cosmetic).
  bool compatible(const PolyRing& other) const noexcept {
    return field == other.field && grading == other.grading;
  }
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(std::uint32_t p, std::vector<std::uint32_t> weights,
                           std::vector<std::string> names = {});

struct Term {
  ExponentVector exponents;
  residue coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p.  Terms are kept strictly decreasing in the ring's
/// term order and never carry a zero coefficient.
class Polynomial {
 public:
  explicit Polynomial(PolyRingPtr ring);
  /// Combines like terms and sorts.
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);

  static Polynomial monomial(PolyRingPtr ring, ExponentVector e, residue c = 1);
  static Polynomial constant(PolyRingPtr ring, residue c);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading_term() const;
  const ExponentVector& leading_monomial() const { return leading_term().exponents; }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Everything but the leading term.
  Polynomial tail() const;
  bool is_constant() const noexcept;

  bool is_homogeneous() const;
  /// Weighted degree of a nonzero homogeneous polynomial, std::nullopt otherwise.
  std::optional<std::int64_t> homogeneous_degree() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(residue c) const;
  Polynomial times_term(const ExponentVector& m, residue c) const;
  Polynomial monic() const;
  Polynomial pow(std::uint64_t k) const;
  /// f^(q) for q a power of p: exponents scaled by q, coefficients fixed (c^q = c in F_p).
  Polynomial frobenius_power(std::uint64_t q) const;

  /// this - c * m * g in one merge pass.
  Polynomial minus_multiple(residue c, const ExponentVector& m, const Polynomial& g) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_->compatible(*b.ring_) && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const Polynomial& other, const char* op) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// Full multivariate division remainder of f by G (divisors scaled to monic).
/// No term of the result is divisible by a leading monomial of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

}  // namespace fpf
