#include <doctest.h>

#include <cmath>

#include "fpf/closed_forms.hpp"
#include "fpf/errors.hpp"
#include "fpf/fp_core.hpp"
#include "fpf/suite.hpp"
#include "helpers.hpp"

using namespace fpf;
using fpf::test::I;
using fpf::test::phi;

namespace {

HNData valid_hn() { return {2, 2, {{Rational(1), 1}, {Rational(-3), 1}}}; }

}  // namespace

TEST_CASE("models are finite at y = 0 and continuous across the Taylor radius") {
  const std::vector<std::uint32_t> deg{1, 1};
  const auto hsop = model_hsop(3, deg);
  CHECK(std::abs(eval_model(hsop, 0.0) - 3.0) < 1e-15);
  const auto hn = model_from_hn(valid_hn());
  for (const auto& m : {hsop, model_dim_one(Rational(1, 2), 3), hn}) {
    const double r = model_taylor_radius;
    const auto inside = eval_model(m, r * (1 - 1e-9));
    const auto outside = eval_model(m, r * (1 + 1e-9));
    CHECK(std::abs(inside - outside) < 1e-9);
    CHECK(std::abs(eval_model(m, -r / 2) - std::conj(eval_model(m, r / 2))) < 1e-14);
  }
}

TEST_CASE("model evaluation matches the defining formulas") {
  const std::vector<std::uint32_t> deg{1, 2};
  const auto hsop = model_hsop(Rational(1, 2), deg);
  const auto dim1 = model_dim_one(2, 3);
  for (double y : {0.1, 0.7, 2.5, -4.0}) {
    CHECK(std::abs(eval_model(hsop, y) - 0.5 * phi(y, 1) * phi(y, 2)) < 1e-13);
    CHECK(std::abs(eval_model(dim1, y) - 2.0 * phi(y, 3)) < 1e-13);
  }
}

TEST_CASE("Taylor coefficients reproduce the function from a long series") {
  const auto m = model_dim_one(Rational(3, 2), 2);
  for (unsigned k = 0; k < 6; ++k) {
    // a_k = e (-i)^k h^(k+1) / (k+1)!
    const std::complex<double> expected = 1.5 * std::pow(-I, double(k)) * std::pow(2.0, k + 1) / std::tgamma(k + 2.0);
    CHECK(std::abs(m.taylor_coefficient(k) - expected) < 1e-13);
  }
  for (double y : {0.3, 1.0, 2.0}) {
    std::complex<double> sum = 0;
    for (unsigned k = 0; k < 200; ++k) sum += m.taylor_coefficient(k) * std::pow(y, double(k));
    CHECK(std::abs(sum - eval_model(m, y)) < 1e-10);
  }
}

TEST_CASE("equivalent constructions give equal models") {
  const std::vector<std::uint32_t> deg{1, 1};
  const auto hsop = model_hsop(1, deg);
  const HNData plane{1, 1, {{Rational(-1), 1}}};
  CHECK(models_equal(hsop, model_from_hn(plane), 0.0));
  const LaurentPolynomialZ b(0, {1, -2, 1});
  CHECK(models_equal(hsop, model_finite_pd(1, b, 2), 0.0));
  CHECK(hsop.is_exact());
  CHECK_FALSE(models_equal(hsop, model_hsop(2, deg), 1e-9));
  CHECK_FALSE(models_equal(model_dim_one(1, 2), model_dim_one(1, 3), 1e-9));
  CHECK_FALSE(models_equal(hsop, model_dim_one(1, 1), 1e-9));
}

TEST_CASE("model construction merges frequencies and checks the vanishing invariant") {
  const auto m = ExponentialPolynomialModel(
      1, {ModelTerm::rational(1, 0), ModelTerm::rational(-2, 1), ModelTerm::rational(1, 1), ModelTerm::rational(0, 5)});
  CHECK(m.terms().size() == 2);
  CHECK_THROWS_AS(ExponentialPolynomialModel(1, {ModelTerm::rational(1, 0)}), invariant_error);
  CHECK_THROWS_AS(ExponentialPolynomialModel(2, {ModelTerm::rational(1, 0), ModelTerm::rational(-1, 1)}),
                  invariant_error);
  CHECK_THROWS_AS(model_dim_one(0, 1), invariant_error);
  CHECK_THROWS_AS(model_dim_one(1, 0), invariant_error);
}

TEST_CASE("HN data validation") {
  CHECK_NOTHROW(validate_hn(valid_hn()));
  auto bad = valid_hn();
  bad.factors[1].rank = 0;
  CHECK_THROWS_AS(validate_hn(bad), invariant_error);
  bad = valid_hn();
  std::swap(bad.factors[0], bad.factors[1]);
  CHECK_THROWS_WITH_AS(validate_hn(bad), doctest::Contains("decreasing"), invariant_error);
  bad = valid_hn();
  bad.rank_s = 3;
  CHECK_THROWS_WITH_AS(validate_hn(bad), doctest::Contains("rank"), invariant_error);
  bad = valid_hn();
  bad.factors[0].mu = 2;
  CHECK_THROWS_WITH_AS(validate_hn(bad), doctest::Contains("mu"), invariant_error);
  bad = valid_hn();
  bad.delta_r = 0;
  CHECK_THROWS_AS(validate_hn(bad), invariant_error);
}

TEST_CASE("HN model terms") {
  const auto m = model_from_hn(valid_hn());
  CHECK(m.pole_order() == 2);
  REQUIRE(m.terms().size() == 4);
  CHECK(m.terms()[0].rho == 0);
  CHECK(*m.terms()[0].exact == 2);
  CHECK(m.terms()[1].rho == Rational(1, 2));
  CHECK(m.terms()[2].rho == 1);
  CHECK(*m.terms()[2].exact == -6);
  CHECK(m.terms()[3].rho == Rational(5, 2));
}

TEST_CASE("json round trip") {
  const std::vector<std::uint32_t> deg{2, 3};
  for (const auto& m : {model_hsop(Rational(1, 6), deg), model_from_hn(valid_hn()), model_dim_one(1, 2)}) {
    const auto j = model_to_json(m);
    CHECK(j.at("d") == m.pole_order());
    const auto back = model_from_json(nlohmann::json::parse(j.dump()));
    CHECK(models_equal(m, back, 0.0));
  }
  CHECK_THROWS(model_from_json(nlohmann::json::parse(R"({"d": 1})")));
}

TEST_CASE("models agree with the computed limits within the error bound") {
  const std::vector<cplx> ys{0.5, 1.0, 2.0, 4.0};
  const auto cusp = cusp_problem();
  const auto model = model_dim_one(1, 2);
  const auto rep = fp_limit(cusp.problem, ys, cusp.n_max);
  for (std::size_t k = 0; k < ys.size(); ++k)
    CHECK(std::abs(eval_model(model, ys[k]) - rep.estimates[k].value) <= rep.estimates[k].error_bound + 1e-6);

  const auto fine = fine_structure_problem();
  const std::vector<std::uint32_t> deg{3, 4};
  const auto fine_model = model_hsop(1, deg);
  const auto fine_rep = fp_limit(fine.problem, ys, fine.n_max);
  for (std::size_t k = 0; k < ys.size(); ++k)
    CHECK(std::abs(eval_model(fine_model, ys[k]) - fine_rep.estimates[k].value) <=
          fine_rep.estimates[k].error_bound + 1e-6);
}
