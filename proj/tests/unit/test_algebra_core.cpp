#include <doctest.h>

#include <random>

#include "fpf/errors.hpp"
#include "fpf/groebner.hpp"
#include "fpf/monomial.hpp"
#include "fpf/polynomial.hpp"
#include "fpf/prime_field.hpp"
#include "helpers.hpp"

using namespace fpf;
using fpf::test::poly;

TEST_CASE("prime field rejects composites and reduces canonically") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(91), std::invalid_argument);
  const PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(15) == 1);
  CHECK(f.inv(3) == 5);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 101u, 65521u, 2147483647u}) {
    const PrimeField f(p);
    std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
    for (int k = 0; k < 200; ++k) {
      const residue a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      // Frobenius is additive
      CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
  }
}

TEST_CASE("weighted_degree") {
  CHECK(weighted_degree({0, 0}, Grading({1, 1})) == 0);
  CHECK(weighted_degree({1, 1}, Grading({2, 3})) == 5);
  CHECK(weighted_degree({3, 2}, Grading({2, 3})) == 12);
  CHECK_THROWS_AS(weighted_degree({1, 2, 3}, Grading({1, 1})), structural_error);
  CHECK_THROWS_AS(Grading({}), structural_error);
  CHECK_THROWS_AS(Grading({1, 0}), structural_error);
}

TEST_CASE("monomial_lcm") {
  CHECK(monomial_lcm({2, 0}, {0, 2}) == ExponentVector{2, 2});
  CHECK(monomial_lcm({1, 3}, {2, 1}) == ExponentVector{2, 3});
  CHECK(monomial_lcm({4, 5}, {4, 5}) == ExponentVector{4, 5});
  CHECK_THROWS_AS(monomial_lcm({1}, {1, 2}), structural_error);
}

TEST_CASE("term order: weighted degree first, then reverse lexicographic") {
  const TermOrder ord(Grading({1, 1, 1}));
  CHECK(ord.less({0, 0, 1}, {0, 0, 2}));
  // same degree: smaller last exponent wins
  CHECK(ord.less({0, 1, 1}, {1, 1, 0}));
  CHECK(ord.less({0, 2, 0}, {2, 0, 0}));
  CHECK(ord.less({1, 0, 1}, {0, 2, 0}));
  const TermOrder weighted(Grading({2, 3}));
  // X^3 and Y^2 both have degree 6; Y^2 has the larger last exponent
  CHECK(weighted.less({0, 2}, {3, 0}));
  CHECK(weighted.less({2, 0}, {0, 2}));
}

TEST_CASE("term order is total and multiplicative on random monomials") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> e(0, 5), w(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<std::uint32_t> weights(n);
    for (auto& x : weights) x = w(rng);
    const TermOrder ord{Grading(weights)};
    ExponentVector a(n), b(n), c(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = e(rng), b[i] = e(rng), c[i] = e(rng);
    const int ab = ord.compare(a, b);
    CHECK((ab == 0) == (a == b));
    CHECK(ord.compare(b, a) == -ab);
    CHECK(ord.compare(monomial_mul(a, c), monomial_mul(b, c)) == ab);
  }
}

TEST_CASE("polynomial parser") {
  const auto ring = make_poly_ring(5, {1, 1}, {"X", "Y"});
  const auto f = poly(ring, "3*X^2*Y - 7 + Y*X^2 + 10*Y");
  CHECK(f.to_string() == "4*X^2*Y + 3");
  CHECK(poly(ring, " - X ").leading_term().coeff == 4);
  CHECK(poly(ring, "5*X").is_zero());
  CHECK_THROWS_AS(poly(ring, "X + Z"), parse_error);
  CHECK_THROWS_AS(poly(ring, "X +"), parse_error);
  CHECK_THROWS_AS(poly(ring, ""), parse_error);
  CHECK_THROWS_AS(poly(ring, "X^"), parse_error);
  CHECK_THROWS_AS(poly(ring, "2X"), parse_error);
}

TEST_CASE("homogeneity and frobenius power") {
  const auto ring = make_poly_ring(3, {2, 3}, {"X", "Y"});
  const auto f = poly(ring, "Y^2 - X^3");
  REQUIRE(f.homogeneous_degree());
  CHECK(*f.homogeneous_degree() == 6);
  CHECK_FALSE(poly(ring, "X + Y").is_homogeneous());
  // over F_p the Frobenius twist equals the ordinary power
  CHECK(f.frobenius_power(3) == f.pow(3));
  CHECK(f.frobenius_power(9) == f.pow(9));
}

TEST_CASE("normal_form examples") {
  const auto ring = make_poly_ring(2, {1, 1}, {"X", "Y"});
  const auto x2 = poly(ring, "X^2");
  CHECK(normal_form(x2, std::vector{x2}).is_zero());
  CHECK(normal_form(poly(ring, "X^3*Y + Y^5 + X"), std::vector{Polynomial::constant(ring, 1)}).is_zero());

  const auto cusp_ring = make_poly_ring(2, {2, 3}, {"X", "Y"});
  const auto r = normal_form(poly(cusp_ring, "Y^2 - X^3"), std::vector{poly(cusp_ring, "X")});
  CHECK(r == poly(cusp_ring, "Y^2"));

  CHECK_THROWS_AS(normal_form(x2, std::vector<Polynomial>{}), structural_error);
  CHECK_THROWS_AS(normal_form(x2, std::vector{Polynomial(ring)}), structural_error);
  const auto other = make_poly_ring(3, {1, 1}, {"X", "Y"});
  CHECK_THROWS_AS(normal_form(x2, std::vector{poly(other, "X")}), structural_error);
}

TEST_CASE("normal_form is a division remainder and idempotent") {
  std::mt19937_64 rng(17);
  const auto ring = make_poly_ring(3, {1, 1, 1}, {"X", "Y", "Z"});
  std::uniform_int_distribution<std::uint32_t> e(0, 3), c(1, 2);
  auto random_poly = [&](int terms) {
    std::vector<Term> t;
    for (int k = 0; k < terms; ++k) t.push_back({{e(rng), e(rng), e(rng)}, c(rng)});
    return Polynomial(ring, t);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_poly(6);
    std::vector<Polynomial> g;
    for (int k = 0; k < 3; ++k) {
      auto d = random_poly(2);
      if (!d.is_zero()) g.push_back(d);
    }
    if (g.empty()) continue;
    const auto r = normal_form(f, g);
    CHECK(normal_form(r, g) == r);
    for (const auto& t : r.terms())
      for (const auto& d : g) CHECK_FALSE(divides(d.leading_monomial(), t.exponents));
    // against a Groebner basis the difference f - r re-divides to zero
    const auto basis = buchberger(g).elements;
    const auto rb = normal_form(f, basis);
    CHECK(normal_form(f - rb, basis).is_zero());
    CHECK(normal_form(rb, basis) == rb);
  }
}
