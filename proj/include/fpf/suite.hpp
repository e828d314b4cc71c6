#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpf/problem.hpp"

namespace fpf {

/// Builds a problem from polynomial text over declared variables.
ProblemSpec make_problem(std::uint32_t p, const std::vector<std::pair<std::string, std::uint32_t>>& variables,
                         const std::vector<std::string>& relations, const std::vector<std::string>& ideal,
                         std::optional<unsigned> dim_override = std::nullopt);

struct NamedProblem {
  std::string name;
  ProblemSpec problem;
  /// Degrees of a homogeneous system of parameters of R (used for Betti polynomials).
  std::vector<std::uint32_t> hsop_degrees;
  /// Largest level used by the convergence checks.
  unsigned n_max;
};

/// F_2[X,Y], I = (X, Y).
NamedProblem plane_problem(std::uint32_t p = 2);
/// F_2[X,Y], I = (X^a, Y^b).
NamedProblem parameter_problem(unsigned a, unsigned b);
/// F_2[X,Y], I = (X^2, XY, Y^3).
NamedProblem xxy_problem();
/// F_2[X,Y]/(Y^2 - X^3) with weights (2,3), I = (X).
NamedProblem cusp_problem();
/// F_2[X,Y], I = (X^3, Y^4).
NamedProblem fine_structure_problem();
/// F_2[X,Y], I = (X^2 + XY, Y^2).
NamedProblem binomial_problem();

/// The fixed set of test problems used by the property checks.
std::vector<NamedProblem> standard_suite();

}  // namespace fpf
