#include "fpf/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fpf/errors.hpp"

namespace fpf {

namespace {

void require_same_length(const ExponentVector& a, const ExponentVector& b, const char* op) {
  if (a.size() != b.size())
    throw structural_error(std::string(op) + ": exponent vectors of lengths " +
                           std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

}  // namespace

Grading::Grading(std::vector<std::uint32_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw structural_error("grading: at least one variable is required");
  for (auto w : weights_)
    if (w == 0) throw structural_error("grading: variable weights must be positive");
}

std::int64_t Grading::weight_sum() const noexcept {
  std::int64_t s = 0;
  for (auto w : weights_) s += w;
  return s;
}

std::int64_t weighted_degree(const ExponentVector& m, const Grading& g) {
  if (m.size() != g.var_count())
    throw structural_error("weighted_degree: exponent vector has " + std::to_string(m.size()) +
                           " entries, grading has " + std::to_string(g.var_count()));
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(m[i]), static_cast<std::int64_t>(g.weight(i)), &term) ||
        __builtin_add_overflow(deg, term, &deg))
      throw std::overflow_error("weighted_degree: overflow");
  }
  return deg;
}

ExponentVector monomial_lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b, "monomial_lcm");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExponentVector monomial_mul(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b, "monomial_mul");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_add_overflow(a[i], b[i], &r[i])) throw std::overflow_error("monomial_mul: exponent overflow");
  return r;
}

ExponentVector monomial_div(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b, "monomial_div");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw structural_error("monomial_div: divisor does not divide");
    r[i] = a[i] - b[i];
  }
  return r;
}

bool divides(const ExponentVector& divisor, const ExponentVector& m) {
  require_same_length(divisor, m, "divides");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (divisor[i] > m[i]) return false;
  return true;
}

ExponentVector monomial_scale(const ExponentVector& m, std::uint64_t factor) {
  ExponentVector r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::uint64_t v = static_cast<std::uint64_t>(m[i]) * factor;
    if (factor != 0 && (v / factor != m[i] || v > std::numeric_limits<std::uint32_t>::max()))
      throw std::overflow_error("monomial_scale: exponent overflow");
    r[i] = static_cast<std::uint32_t>(v);
  }
  return r;
}

bool is_one(const ExponentVector& m) noexcept {
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

int pure_power_variable(const ExponentVector& m) noexcept {
  int var = -1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (var >= 0) return -1;
    var = static_cast<int>(i);
  }
  return var;
}

int TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = weighted_degree(a, grading_);
  const auto db = weighted_degree(b, grading_);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace fpf
