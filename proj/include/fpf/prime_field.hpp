#pragma once

#include <cstdint>

namespace fpf {

/// Canonical residue in [0, p).
using residue = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// The prime field F_p.  p must be prime and below 2^31 so that products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  residue reduce(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<residue>(r < 0 ? r + p_ : r);
  }
  residue add(residue a, residue b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  residue sub(residue a, residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  residue neg(residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  residue mul(residue a, residue b) const noexcept {
    return static_cast<residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  residue pow(residue a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error for a == 0.
  residue inv(residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace fpf
