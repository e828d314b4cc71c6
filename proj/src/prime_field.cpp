#include "fpf/prime_field.hpp"

#include <stdexcept>
#include <string>

#include "fpf/errors.hpp"

namespace fpf {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw structural_error("prime field: p must be below 2^31");
  if (!is_prime(p)) throw structural_error("prime field: " + std::to_string(p) + " is not prime");
}

residue PrimeField::pow(residue a, std::uint64_t e) const noexcept {
  residue result = 1 % p_;
  residue base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

residue PrimeField::inv(residue a) const {
  if (a % p_ == 0) throw std::domain_error("prime field: zero has no inverse");
  return pow(a, p_ - 2);
}

}  // namespace fpf
