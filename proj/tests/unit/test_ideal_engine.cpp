#include <doctest.h>

#include "fpf/errors.hpp"
#include "fpf/groebner.hpp"
#include "fpf/macaulay.hpp"
#include "fpf/properties.hpp"
#include "fpf/staircase.hpp"
#include "fpf/suite.hpp"
#include "helpers.hpp"

using namespace fpf;
using fpf::test::big;
using fpf::test::poly;
using fpf::test::polys;

namespace {

std::vector<BigInt> table_of(const NamedProblem& np, unsigned n) { return np.problem.table(n)->lengths; }

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// F_p[X] / (X^e) with X in degree w
std::vector<BigInt> truncated_line(std::uint64_t e, std::uint32_t w) {
  std::vector<BigInt> out((e - 1) * w + 1, 0);
  for (std::uint64_t k = 0; k < e; ++k) out[k * w] = 1;
  return out;
}

}  // namespace

TEST_CASE("bracket_power raises generators to the q-th power") {
  const auto ring = make_poly_ring(3, {1, 1}, {"X", "Y"});
  const HomogeneousIdeal I(polys(ring, {"X + Y", "X*Y"}));
  const auto b = bracket_power(I, 2);
  REQUIRE(b.generators().size() == 2);
  CHECK(b.generators()[0] == poly(ring, "X^9 + Y^9"));
  CHECK(b.generators()[1] == poly(ring, "X^9*Y^9"));
  CHECK(bracket_power(I, 0).generators() == I.generators());
  CHECK(prime_power(2, 10) == 1024);
  CHECK_THROWS(prime_power(2, 64));
}

TEST_CASE("ideal construction rejects bad generators") {
  const auto ring = make_poly_ring(2, {1, 1}, {"X", "Y"});
  CHECK_THROWS_AS(HomogeneousIdeal(polys(ring, {"X + Y^2"})), structural_error);
  CHECK_THROWS_AS(HomogeneousIdeal(std::vector<Polynomial>{}), structural_error);
  CHECK_THROWS_AS(RingPresentation(ring, polys(ring, {"X + Y^2"})), structural_error);
}

TEST_CASE("monomial ideal minimalization and queries") {
  const MonomialIdeal m(2, {{2, 1}, {3, 1}, {0, 4}, {2, 1}});
  CHECK(m.generators().size() == 2);
  CHECK(m.contains({5, 2}));
  CHECK_FALSE(m.contains({1, 3}));
  CHECK(m.pure_power(1) == 4u);
  CHECK_FALSE(m.pure_power(0));
  CHECK_FALSE(m.is_zero_dimensional());
  const MonomialIdeal z(2, {{3, 0}, {1, 1}, {0, 2}});
  CHECK(z.is_zero_dimensional());
  CHECK(z.bounding_box() == ExponentVector{3, 2});
  CHECK(MonomialIdeal(2, {{0, 0}, {1, 0}}).is_unit());
}

TEST_CASE("buchberger examples") {
  const auto ring = make_poly_ring(2, {1, 1}, {"X", "Y"});
  SUBCASE("binomial ideal has the monomial initial ideal (X^2, Y^2)") {
    const auto gb = buchberger(polys(ring, {"X^2 + X*Y", "Y^2"}));
    CHECK(initial_ideal(gb) == MonomialIdeal(2, {{2, 0}, {0, 2}}));
  }
  SUBCASE("unit ideal") {
    const auto gb = buchberger(polys(ring, {"X", "X + 1"}));
    CHECK(gb.is_unit());
    CHECK(initial_ideal(gb).is_unit());
  }
  SUBCASE("reduced basis is monic and auto-reduced") {
    const auto r3 = make_poly_ring(3, {1, 1}, {"X", "Y"});
    const auto gb = buchberger(polys(r3, {"2*X^2 + X*Y", "X*Y + Y^2"}));
    for (const auto& g : gb.elements) {
      CHECK(g.leading_term().coeff == 1);
      for (const auto& h : gb.elements)
        if (&g != &h)
          for (const auto& t : g.terms()) CHECK_FALSE(divides(h.leading_monomial(), t.exponents));
    }
  }
  SUBCASE("cusp bracket powers under weighted grevlex") {
    const auto cusp = make_poly_ring(2, {2, 3}, {"X", "Y"});
    const auto rel = poly(cusp, "Y^2 - X^3");
    // X^3 leads Y^2 - X^3, so the bases differ from the ones led by Y^2
    const auto q2 = buchberger(std::vector{rel, poly(cusp, "X^2")});
    CHECK(initial_ideal(q2) == MonomialIdeal(2, {{2, 0}, {0, 2}}));
    const auto q4 = buchberger(std::vector{rel, poly(cusp, "X^4")});
    CHECK(initial_ideal(q4) == MonomialIdeal(2, {{3, 0}, {1, 2}, {0, 4}}));
    // same Hilbert function as (Y^2, X^4)
    const Grading g({2, 3});
    CHECK(staircase_counts(initial_ideal(q4), g) == staircase_counts(MonomialIdeal(2, {{4, 0}, {0, 2}}), g));
  }
}

TEST_CASE("staircase counts on examples") {
  const Grading flat({1, 1});
  CHECK(staircase_counts(MonomialIdeal(2, {{1, 0}, {0, 1}}), flat) == big({1}));
  CHECK(staircase_counts(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 3}}), flat) == big({1, 2, 1}));
  CHECK(staircase_counts(MonomialIdeal(2, {{0, 0}}), flat).empty());
  CHECK(staircase_counts(MonomialIdeal(2, {{4, 0}, {2, 2}, {0, 6}}), flat) == big({1, 2, 3, 4, 3, 2, 1}));
  const Grading w({2, 3});
  CHECK(staircase_counts(MonomialIdeal(2, {{2, 0}, {0, 2}}), w) == big({1, 0, 1, 1, 0, 1}));
  CHECK(staircase_numerator(MonomialIdeal(2, {{1, 0}, {0, 1}}), flat) ==
        LaurentPolynomialZ::one_minus_t_pow(1) * LaurentPolynomialZ::one_minus_t_pow(1));
}

TEST_CASE("enumeration oracle") {
  const Grading flat({1, 1, 1});
  const MonomialIdeal m(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}});
  CHECK(enumeration_oracle(m, flat) == big({1, 3, 3}));
  CHECK(staircase_counts(m, flat) == enumeration_oracle(m, flat));
  CHECK_THROWS_AS(enumeration_oracle(MonomialIdeal(2, {{1, 0}}), Grading({1, 1})), structural_error);
}

TEST_CASE("staircase counts beyond the inclusion-exclusion limit") {
  const Grading flat({1, 1});
  SUBCASE("many generators, small box") {
    std::vector<ExponentVector> gens;
    for (std::uint32_t k = 0; k <= 14; ++k) gens.push_back({k, 14 - k});
    const MonomialIdeal m(2, gens);
    REQUIRE(m.generators().size() > inclusion_exclusion_limit);
    std::vector<long> expected;
    for (long j = 0; j < 14; ++j) expected.push_back(j + 1);
    CHECK(staircase_counts(m, flat) == big(expected));
  }
  SUBCASE("many generators, box too large to enumerate") {
    std::vector<ExponentVector> gens;
    for (std::uint32_t k = 0; k <= 13; ++k) gens.push_back({1000 * k, 13000 - 1000 * k});
    const MonomialIdeal m(2, gens);
    REQUIRE(m.generators().size() > inclusion_exclusion_limit);
    const auto counts = staircase_counts(m, flat);
    for (long j : {0L, 1L, 500L, 12999L}) CHECK(counts[j] == j + 1);
    BigInt total = 0;
    for (const auto& c : counts) total += c;
    CHECK(total == 91000000);
  }
}

TEST_CASE("divide_by_weight_denominator rejects non-polynomial quotients") {
  CHECK_THROWS_AS(divide_by_weight_denominator(LaurentPolynomialZ::constant(1), Grading({1})), invariant_error);
  CHECK(divide_by_weight_denominator(LaurentPolynomialZ::one_minus_t_pow(3), Grading({1})) == big({1, 1, 1}));
}

TEST_CASE("graded lengths of the standard problems") {
  CHECK(table_of(plane_problem(), 1) == big({1, 2, 1}));
  CHECK(table_of(xxy_problem(), 0) == big({1, 2, 1}));
  CHECK(table_of(xxy_problem(), 1) == big({1, 2, 3, 4, 3, 2, 1}));
  CHECK(xxy_problem().problem.table(1)->total() == 16);
  CHECK(table_of(cusp_problem(), 1) == big({1, 0, 1, 1, 0, 1}));
  CHECK(table_of(binomial_problem(), 0) == big({1, 2, 1}));
  const auto t = plane_problem().problem.table(3);
  CHECK(t->q() == 8);
  CHECK(t->total() == 64);
  CHECK(t->length(-1) == 0);
  CHECK(t->length(100) == 0);
  CHECK(t->max_degree() == 14);
  CHECK(t->moment(1) == 64 * 7);
}

TEST_CASE("plane lengths follow the tent shape for every q") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto np = plane_problem(p);
    for (unsigned n = 0; n <= 3; ++n) {
      const auto t = np.problem.table(n);
      const long q = t->q().get_si();
      REQUIRE(t->max_degree() == 2 * q - 2);
      for (long j = 0; j <= 2 * q - 2; ++j) CHECK(t->length(j) == (j < q ? j + 1 : 2 * q - 1 - j));
    }
  }
}

TEST_CASE("direct sums convolve graded lengths") {
  const auto P = make_problem(2, {{"X", 1}, {"Y", 2}, {"Z", 1}}, {}, {"X^2", "Y", "Z^3"});
  for (unsigned n = 0; n <= 3; ++n) {
    const std::uint64_t q = 1ull << n;
    const auto expected = convolve(convolve(truncated_line(2 * q, 1), truncated_line(q, 2)), truncated_line(3 * q, 1));
    CHECK(P.table(n)->lengths == expected);
  }
}

TEST_CASE("frobenius basis and support constant") {
  const auto cusp = cusp_problem();
  const auto gb = frobenius_basis(cusp.problem.ring(), cusp.problem.ideal(), 0);
  CHECK(initial_ideal(gb) == MonomialIdeal(2, {{1, 0}, {0, 2}}));
  CHECK(support_constant(cusp.problem.ring(), cusp.problem.ideal()) == 15);
  CHECK(support_constant(plane_problem().problem.ring(), plane_problem().problem.ideal()) == 4);
}

TEST_CASE("ideals without finite colength name the missing variable") {
  const auto P = make_problem(2, {{"X", 1}, {"Y", 1}}, {}, {"X"});
  try {
    (void)P.table(0);
    FAIL("expected colength_error");
  } catch (const colength_error& e) {
    CHECK(e.variable() == "Y");
    CHECK(std::string(e.what()).find("Y") != std::string::npos);
  }
}

TEST_CASE("macaulay rank oracle on examples") {
  const auto ring = make_poly_ring(2, {1, 1}, {"X", "Y"});
  const RingPresentation R(ring);
  const auto gens = polys(ring, {"X^2 + X*Y", "Y^2"});
  CHECK(macaulay_rank_oracle(R, gens, 0) == 1);
  CHECK(macaulay_rank_oracle(R, gens, 1) == 2);
  CHECK(macaulay_rank_oracle(R, gens, 2) == 1);
  CHECK(macaulay_rank_oracle(R, gens, 3) == 0);
  CHECK(monomials_of_degree(Grading({2, 3}), 6).size() == 2);
  CHECK(monomials_of_degree(Grading({2, 3}), 1).empty());
  const auto cusp = make_poly_ring(2, {2, 3}, {"X", "Y"});
  const RingPresentation C(cusp, polys(cusp, {"Y^2 - X^3"}));
  const auto x4 = polys(cusp, {"X^4"});
  const auto t = make_problem(2, {{"X", 2}, {"Y", 3}}, {"Y^2 - X^3"}, {"X"}).table(2);
  for (long j = 0; j <= 12; ++j) CHECK(macaulay_rank_oracle(C, x4, j) == t->length(j));
}

TEST_CASE("table cache is shared by copies and prefetch fills it") {
  const auto np = fine_structure_problem();
  const ProblemSpec copy = np.problem;
  np.problem.prefetch_tables(4);
  CHECK(copy.table(4).get() == np.problem.table(4).get());
  CHECK(copy.table(2)->total() == 12 * 16);
  CHECK(np.problem.dimension() == 2);
  CHECK(cusp_problem().problem.dimension() == 1);
  CHECK(make_problem(2, {{"X", 1}, {"Y", 1}}, {}, {"X", "Y"}, 1u).dimension() == 1);
}

TEST_CASE("randomized: staircase counts agree with enumeration") {
  const auto r = check_staircase_vs_enumeration(200, 20240601);
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("randomized: initial ideal dimensions agree with Macaulay ranks") {
  const auto r = check_groebner_vs_macaulay(50, 20240602);
  INFO(r.detail);
  CHECK(r.passed);
}
