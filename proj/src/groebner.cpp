#include "fpf/groebner.hpp"

#include <algorithm>

#include "fpf/errors.hpp"

namespace fpf {

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  ExponentVector lcm;
  std::int64_t degree;
};

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const ExponentVector& lcm) {
  // both monic
  const auto fm = monomial_div(lcm, f.leading_monomial());
  const auto gm = monomial_div(lcm, g.leading_monomial());
  return f.times_term(fm, 1).minus_multiple(1, gm, g);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis) {
  const auto& order = basis.front().ring()->order;
  // minimal: drop elements whose leading monomial is divisible by an earlier-kept or other one
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      if (divides(lj, li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Polynomial head = Polynomial::monomial(minimal[i].ring(), minimal[i].leading_monomial(), 1);
    Polynomial tail = minimal[i].monic().tail();
    if (!others.empty() && !tail.is_zero()) tail = normal_form(tail, others);
    reduced.push_back(head + tail);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens) {
  if (gens.empty()) throw structural_error("buchberger: no input polynomials");
  const PolyRingPtr ring = gens.front().ring();
  const Grading& grading = ring->grading;
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (!g.ring()->compatible(*ring)) throw structural_error("buchberger: inputs over different rings");
    if (g.is_zero()) continue;
    if (g.is_constant()) return {{Polynomial::constant(ring, 1)}, ring->order};
    basis.push_back(g.monic());
  }
  if (basis.empty()) return {{}, ring->order};

  std::vector<CriticalPair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto l = monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      const auto deg = weighted_degree(l, grading);
      pairs.push_back({i, j, std::move(l), deg});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const CriticalPair& a, const CriticalPair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    const CriticalPair pair = std::move(*best);
    pairs.erase(best);
    const auto& f = basis[pair.i];
    const auto& g = basis[pair.j];
    if (coprime(f.leading_monomial(), g.leading_monomial())) continue;
    Polynomial s = s_polynomial(f, g, pair.lcm);
    if (s.is_zero()) continue;
    Polynomial r = normal_form(s, basis);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {{Polynomial::constant(ring, 1)}, ring->order};
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  return {reduce_basis(std::move(basis)), ring->order};
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  std::vector<ExponentVector> lms;
  lms.reserve(basis.elements.size());
  std::size_t nvars = basis.order.grading().var_count();
  for (const auto& g : basis.elements) lms.push_back(g.leading_monomial());
  return MonomialIdeal(nvars, std::move(lms));
}

}  // namespace fpf
