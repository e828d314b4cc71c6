#pragma once

#include <span>
#include <vector>

#include "fpf/ideal.hpp"

namespace fpf {

/// Reduced Groebner basis: monic, auto-reduced, sorted ascending by leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> elements;
  TermOrder order;

  bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm degree
/// first, ties broken by pair index) and the coprime-leading-term criterion.
/// Input polynomials must share one ring; zero inputs are ignored.
GroebnerBasis buchberger(std::span<const Polynomial> gens);

/// Leading monomials of a reduced basis.  The unit basis {1} gives the unit ideal.
MonomialIdeal initial_ideal(const GroebnerBasis& basis);

}  // namespace fpf
