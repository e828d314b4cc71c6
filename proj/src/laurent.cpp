#include "fpf/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace fpf {

LaurentPolynomialZ::LaurentPolynomialZ(long low, std::vector<BigInt> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPolynomialZ LaurentPolynomialZ::monomial(long exponent, const BigInt& c) {
  return LaurentPolynomialZ(exponent, {c});
}

LaurentPolynomialZ LaurentPolynomialZ::one_minus_t_pow(long delta) {
  if (delta <= 0) throw std::invalid_argument("one_minus_t_pow: delta must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(delta) + 1);
  c.front() = 1;
  c.back() = -1;
  return LaurentPolynomialZ(0, std::move(c));
}

void LaurentPolynomialZ::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt LaurentPolynomialZ::coeff(long exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPolynomialZ::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

LaurentPolynomialZ LaurentPolynomialZ::operator+(const LaurentPolynomialZ& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const long lo = std::min(low_, o.low_);
  const long hi = std::max(high_degree(), o.high_degree());
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  return LaurentPolynomialZ(lo, std::move(c));
}

LaurentPolynomialZ LaurentPolynomialZ::operator-() const {
  LaurentPolynomialZ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPolynomialZ LaurentPolynomialZ::operator-(const LaurentPolynomialZ& o) const { return *this + (-o); }

LaurentPolynomialZ LaurentPolynomialZ::operator*(const LaurentPolynomialZ& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return LaurentPolynomialZ(low_ + o.low_, std::move(c));
}

LaurentPolynomialZ LaurentPolynomialZ::times_one_minus_t_pow(long delta) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + static_cast<std::size_t>(delta));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    c[k] += coeffs_[k];
    c[k + static_cast<std::size_t>(delta)] -= coeffs_[k];
  }
  return LaurentPolynomialZ(low_, std::move(c));
}

std::optional<LaurentPolynomialZ> LaurentPolynomialZ::exact_divide(const LaurentPolynomialZ& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (is_zero()) return LaurentPolynomialZ{};
  if (coeffs_.size() < divisor.coeffs_.size()) return std::nullopt;
  // long division from the top; divisor support is usually sparse
  std::vector<std::pair<std::size_t, BigInt>> support;
  for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k)
    if (divisor.coeffs_[k] != 0) support.emplace_back(k, divisor.coeffs_[k]);
  const std::size_t dtop = divisor.coeffs_.size() - 1;
  const BigInt& lead = divisor.coeffs_.back();
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(coeffs_.size() - dtop);
  BigInt q, r;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dtop];
    if (top == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) return std::nullopt;
    quot[k] = q;
    for (const auto& [idx, c] : support) rem[k + idx] -= q * c;
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return LaurentPolynomialZ(low_ - divisor.low_, std::move(quot));
}

BigInt LaurentPolynomialZ::value_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::complex<double> LaurentPolynomialZ::eval(std::complex<double> z) const {
  if (coeffs_.empty()) return 0.0;
  std::complex<double> acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k].get_d();
  if (low_ == 0) return acc;
  std::complex<double> shift = 1.0;
  const std::complex<double> base = low_ > 0 ? z : 1.0 / z;
  for (long k = 0; k < std::labs(low_); ++k) shift *= base;
  return acc * shift;
}

std::string LaurentPolynomialZ::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const long e = low_ + static_cast<long>(k);
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace fpf
