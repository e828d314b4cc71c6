#pragma once

#include <span>
#include <vector>

#include "fpf/ideal.hpp"

namespace fpf {

/// All monomials of weighted degree j, in descending term order.
std::vector<ExponentVector> monomials_of_degree(const Grading& g, std::int64_t j);

/// dim_k of the degree-j piece of F_p[X] / (relations + gens), by row reduction of
/// the matrix of degree-j multiples of every generator.  Independent of Groebner bases.
std::size_t macaulay_rank_oracle(const RingPresentation& R, std::span<const Polynomial> gens, std::int64_t j);

}  // namespace fpf
