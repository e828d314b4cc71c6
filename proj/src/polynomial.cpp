#include "fpf/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "fpf/errors.hpp"

namespace fpf {

PolyRing::PolyRing(PrimeField f, Grading g, std::vector<std::string> n)
    : field(f), grading(g), order(g), names(std::move(n)) {
  if (names.empty()) {
    for (std::size_t i = 0; i < grading.var_count(); ++i) names.push_back("x" + std::to_string(i + 1));
  }
  if (names.size() != grading.var_count())
    throw structural_error("poly ring: " + std::to_string(names.size()) + " names for " +
                           std::to_string(grading.var_count()) + " variables");
}

PolyRingPtr make_poly_ring(std::uint32_t p, std::vector<std::uint32_t> weights, std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(PrimeField(p), Grading(std::move(weights)), std::move(names));
}

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw structural_error("polynomial: null ring");
}

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms) : Polynomial(std::move(ring)) {
  const auto& order = ring_->order;
  for (auto& t : terms) {
    if (t.exponents.size() != ring_->var_count())
      throw structural_error("polynomial: term has wrong number of exponents");
    t.coeff %= ring_->field.characteristic();
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.exponents, b.exponents) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponents == t.exponents) {
      terms_.back().coeff = ring_->field.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::monomial(PolyRingPtr ring, ExponentVector e, residue c) {
  std::vector<Term> terms;
  terms.push_back({std::move(e), c});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::constant(PolyRingPtr ring, residue c) {
  ExponentVector zero(ring->var_count(), 0);
  return monomial(std::move(ring), std::move(zero), c);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw structural_error("polynomial: zero has no leading term");
  return terms_.front();
}

Polynomial Polynomial::tail() const {
  Polynomial out(ring_);
  if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

bool Polynomial::is_constant() const noexcept { return terms_.size() == 1 && is_one(terms_.front().exponents); }

bool Polynomial::is_homogeneous() const { return homogeneous_degree().has_value(); }

std::optional<std::int64_t> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto deg = weighted_degree(terms_.front().exponents, ring_->grading);
  for (const auto& t : terms_)
    if (weighted_degree(t.exponents, ring_->grading) != deg) return std::nullopt;
  return deg;
}

void Polynomial::require_compatible(const Polynomial& other, const char* op) const {
  if (!ring_->compatible(*other.ring_))
    throw structural_error(std::string(op) + ": polynomials over different rings");
}

Polynomial Polynomial::minus_multiple(residue c, const ExponentVector& m, const Polynomial& g) const {
  require_compatible(g, "minus_multiple");
  const auto& field = ring_->field;
  const auto& order = ring_->order;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const residue neg_c = field.neg(c % field.characteristic());
  auto shifted = [&](std::size_t k) { return Term{monomial_mul(g.terms_[k].exponents, m), field.mul(g.terms_[k].coeff, neg_c)}; };
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Term s = shifted(j);
    if (s.coeff == 0) {
      ++j;
      continue;
    }
    if (i == terms_.size()) {
      out.terms_.push_back(std::move(s));
      ++j;
      continue;
    }
    const int cmp = order.compare(terms_[i].exponents, s.exponents);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(std::move(s));
      ++j;
    } else {
      const residue sum = field.add(terms_[i].coeff, s.coeff);
      if (sum != 0) out.terms_.push_back({terms_[i].exponents, sum});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  ExponentVector one(ring_->var_count(), 0);
  return minus_multiple(ring_->field.neg(1 % ring_->field.characteristic()), one, other);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  ExponentVector one(ring_->var_count(), 0);
  return minus_multiple(1 % ring_->field.characteristic(), one, other);
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field.neg(1 % ring_->field.characteristic())); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_compatible(other, "multiply");
  Polynomial acc(ring_);
  for (const auto& t : other.terms_) acc = acc + times_term(t.exponents, t.coeff);
  return acc;
}

Polynomial Polynomial::scaled(residue c) const {
  ExponentVector one(ring_->var_count(), 0);
  return times_term(one, c);
}

Polynomial Polynomial::times_term(const ExponentVector& m, residue c) const {
  Polynomial out(ring_);
  c %= ring_->field.characteristic();
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves the order
  for (const auto& t : terms_) out.terms_.push_back({monomial_mul(t.exponents, m), ring_->field.mul(t.coeff, c)});
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field.inv(terms_.front().coeff));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius_power(std::uint64_t q) const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({monomial_scale(t.exponents, q), t.coeff});
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = is_one(t.exponents);
    if (t.coeff != 1 || unit) os << t.coeff;
    bool need_star = t.coeff != 1;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (need_star) os << '*';
      os << ring_->names[i];
      if (t.exponents[i] != 1) os << '^' << t.exponents[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (divisors.empty()) throw structural_error("normal_form: empty divisor list");
  std::vector<Polynomial> monic;
  monic.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw structural_error("normal_form: zero divisor polynomial");
    if (!g.ring()->compatible(*f.ring())) throw structural_error("normal_form: field or grading mismatch");
    monic.push_back(g.monic());
  }
  Polynomial rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term();
    const Polynomial* hit = nullptr;
    for (const auto& g : monic) {
      if (divides(g.leading_monomial(), lt.exponents)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      rest = rest.minus_multiple(lt.coeff, monomial_div(lt.exponents, hit->leading_monomial()), *hit);
    } else {
      remainder.push_back(lt);
      rest = rest.tail();
    }
  }
  return Polynomial(f.ring(), std::move(remainder));
}

}  // namespace fpf
