#include "fpf/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "fpf/errors.hpp"

namespace fpf {

RingPresentation::RingPresentation(PolyRingPtr ring, std::vector<Polynomial> relations)
    : ring_(std::move(ring)), relations_(std::move(relations)) {
  if (!ring_) throw structural_error("ring presentation: null ring");
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& r = relations_[i];
    if (!r.ring()->compatible(*ring_)) throw structural_error("ring presentation: relation over a different ring");
    const auto deg = r.homogeneous_degree();
    if (!deg) throw structural_error("ring presentation: relation " + std::to_string(i + 1) + " (" + r.to_string() +
                                     ") is zero or not homogeneous");
    if (*deg <= 0) throw structural_error("ring presentation: relation " + std::to_string(i + 1) + " has degree 0");
  }
}

HomogeneousIdeal::HomogeneousIdeal(std::vector<Polynomial> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw structural_error("ideal: at least one generator is required");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!g.ring()->compatible(*generators_.front().ring()))
      throw structural_error("ideal: generators over different rings");
    if (!g.is_homogeneous())
      throw structural_error("ideal: generator " + std::to_string(i + 1) + " (" + g.to_string() +
                             ") is zero or not homogeneous");
  }
}

MonomialIdeal::MonomialIdeal(std::size_t var_count, std::vector<ExponentVector> generators) : var_count_(var_count) {
  for (const auto& m : generators)
    if (m.size() != var_count) throw structural_error("monomial ideal: generator length mismatch");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
      redundant = j != i && divides(generators[j], generators[i]);
    if (!redundant) generators_.push_back(generators[i]);
  }
  // deterministic order: by total exponent, then lexicographic
  std::sort(generators_.begin(), generators_.end(), [](const ExponentVector& a, const ExponentVector& b) {
    std::uint64_t sa = 0, sb = 0;
    for (auto e : a) sa += e;
    for (auto e : b) sb += e;
    return sa != sb ? sa < sb : a > b;
  });
}

bool MonomialIdeal::is_unit() const noexcept { return generators_.size() == 1 && is_one(generators_.front()); }

bool MonomialIdeal::contains(const ExponentVector& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const ExponentVector& g) { return divides(g, m); });
}

std::optional<std::uint32_t> MonomialIdeal::pure_power(std::size_t var) const {
  std::optional<std::uint32_t> best;
  for (const auto& g : generators_) {
    if (is_one(g)) return 0u;
    if (pure_power_variable(g) == static_cast<int>(var) && (!best || g[var] < *best)) best = g[var];
  }
  return best;
}

bool MonomialIdeal::is_zero_dimensional() const {
  for (std::size_t v = 0; v < var_count_; ++v)
    if (!pure_power(v)) return false;
  return true;
}

ExponentVector MonomialIdeal::bounding_box() const {
  ExponentVector box(var_count_);
  for (std::size_t v = 0; v < var_count_; ++v) {
    const auto k = pure_power(v);
    if (!k) throw structural_error("bounding_box: variable " + std::to_string(v + 1) + " has no pure power");
    box[v] = *k;
  }
  return box;
}

std::uint64_t prime_power(std::uint32_t p, unsigned n) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i)
    if (__builtin_mul_overflow(q, static_cast<std::uint64_t>(p), &q)) throw std::overflow_error("prime_power: overflow");
  return q;
}

HomogeneousIdeal bracket_power(const HomogeneousIdeal& ideal, unsigned n) {
  const std::uint64_t q = prime_power(ideal.ring()->field.characteristic(), n);
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius_power(q));
  return HomogeneousIdeal(std::move(gens));
}

}  // namespace fpf
