#include "fpf/suite.hpp"

#include "fpf/poly_parser.hpp"

namespace fpf {

ProblemSpec make_problem(std::uint32_t p, const std::vector<std::pair<std::string, std::uint32_t>>& variables,
                         const std::vector<std::string>& relations, const std::vector<std::string>& ideal,
                         std::optional<unsigned> dim_override) {
  std::vector<std::uint32_t> weights;
  std::vector<std::string> names;
  for (const auto& [name, w] : variables) {
    names.push_back(name);
    weights.push_back(w);
  }
  const auto ring = make_poly_ring(p, std::move(weights), std::move(names));
  std::vector<Polynomial> rels, gens;
  for (const auto& r : relations) rels.push_back(parse_polynomial(r, ring));
  for (const auto& g : ideal) gens.push_back(parse_polynomial(g, ring));
  return ProblemSpec(RingPresentation(ring, std::move(rels)), HomogeneousIdeal(std::move(gens)), dim_override);
}

NamedProblem plane_problem(std::uint32_t p) {
  return {"plane_p" + std::to_string(p), make_problem(p, {{"X", 1}, {"Y", 1}}, {}, {"X", "Y"}), {1, 1},
          p == 2 ? 10u : 6u};
}

NamedProblem parameter_problem(unsigned a, unsigned b) {
  return {"param_" + std::to_string(a) + "_" + std::to_string(b),
          make_problem(2, {{"X", 1}, {"Y", 1}}, {}, {"X^" + std::to_string(a), "Y^" + std::to_string(b)}),
          {1, 1},
          8};
}

NamedProblem xxy_problem() {
  return {"xxy", make_problem(2, {{"X", 1}, {"Y", 1}}, {}, {"X^2", "X*Y", "Y^3"}), {1, 1}, 10};
}

NamedProblem cusp_problem() {
  return {"cusp", make_problem(2, {{"X", 2}, {"Y", 3}}, {"Y^2 - X^3"}, {"X"}), {2}, 10};
}

NamedProblem fine_structure_problem() {
  return {"fine_3_4", make_problem(2, {{"X", 1}, {"Y", 1}}, {}, {"X^3", "Y^4"}), {1, 1}, 8};
}

NamedProblem binomial_problem() {
  return {"binomial", make_problem(2, {{"X", 1}, {"Y", 1}}, {}, {"X^2 + X*Y", "Y^2"}), {1, 1}, 10};
}

std::vector<NamedProblem> standard_suite() {
  return {plane_problem(2),     parameter_problem(2, 3), xxy_problem(),    cusp_problem(),
          fine_structure_problem(), plane_problem(3),    binomial_problem()};
}

}  // namespace fpf
