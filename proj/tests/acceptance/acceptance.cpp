// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fpf/closed_forms.hpp"
#include "fpf/density.hpp"
#include "fpf/fp_core.hpp"
#include "fpf/groebner.hpp"
#include "fpf/hilbert_series.hpp"
#include "fpf/number_format.hpp"
#include "fpf/properties.hpp"
#include "fpf/staircase.hpp"
#include "fpf/suite.hpp"

using namespace fpf;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

const cplx I(0.0, 1.0);
const std::vector<cplx> grid{0.5, 1.0, 2.0, 4.0};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.passed) {
    o.passed = false;
    o.detail = what;
  }
}

// max over the grid of |F_n(y) - model(y)|
double max_deviation(const ProblemSpec& P, unsigned n, const std::function<cplx(cplx)>& model) {
  double worst = 0;
  for (const auto y : grid) worst = std::max(worst, std::abs(fn_eval(P, n, y) - model(y)));
  return worst;
}

Outcome regular_ring_hk() {
  Outcome o;
  const auto np = plane_problem(2);
  for (unsigned n = 0; n <= 10; ++n)
    require(o, hk_multiplicity(np.problem, n) == 1, "n=" + std::to_string(n) + " gives " +
                                                        hk_multiplicity(np.problem, n).get_str());
  if (o.passed) o.detail = "e_HK = 1 for n = 0..10";
  return o;
}

Outcome parameter_ideals() {
  Outcome o;
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned b = 1; b <= 3; ++b) {
      const auto np = parameter_problem(a, b);
      for (unsigned n = 0; n <= 8; ++n) {
        const Rational hk = hk_multiplicity(np.problem, n);
        require(o, hk == a * b,
                "(X^" + std::to_string(a) + ", Y^" + std::to_string(b) + ") n=" + std::to_string(n) + ": " + hk.get_str());
      }
    }
  if (o.passed) o.detail = "e_HK = a*b for a, b in {1,2,3}, n <= 8";
  return o;
}

Outcome product_formula() {
  Outcome o;
  const auto np = plane_problem(2);
  const double dev = max_deviation(np.problem, 10, [](cplx y) {
    const cplx f = (1.0 - std::exp(-I * y)) / (I * y);
    return f * f;
  });
  require(o, dev <= 5e-3, "deviation " + format_double(dev));
  if (o.passed) o.detail = "max deviation " + format_double(dev) + " <= 5e-3";
  return o;
}

Outcome finite_pd() {
  Outcome o;
  const auto np = xxy_problem();
  const auto& P = np.problem;
  // enumeration oracle on the monomial ideal (X^2, XY, Y^3)
  const MonomialIdeal mono(2, {{2, 0}, {1, 1}, {0, 3}});
  const auto oracle = enumeration_oracle(mono, P.ring().grading());
  require(o, oracle == P.table(0)->lengths, "level-0 table differs from enumeration");
  BigInt total = 0;
  for (const auto& c : oracle) total += c;
  require(o, total == 4, "enumerated length " + total.get_str());
  const LaurentPolynomialZ expected(0, {1, 0, -2, 0, 1});
  const LaurentPolynomialZ from_oracle =
      LaurentPolynomialZ(0, oracle) * LaurentPolynomialZ::one_minus_t_pow(1) * LaurentPolynomialZ::one_minus_t_pow(1);
  require(o, from_oracle == expected, "oracle B = " + from_oracle.to_string());

  const auto b = betti_alternating_polynomial(P, np.hsop_degrees, 0);
  require(o, b == expected, "B = " + b.to_string());
  for (unsigned n = 0; n <= 10; ++n)
    require(o, hk_multiplicity(P, n) == 4, "e_HK at n=" + std::to_string(n) + " is " + hk_multiplicity(P, n).get_str());
  const double dev = max_deviation(P, 10, [](cplx y) {
    const cplx f = 1.0 - std::exp(-2.0 * I * y);
    return f * f / ((I * y) * (I * y));
  });
  require(o, dev <= 1e-2, "deviation " + format_double(dev));
  if (o.passed) o.detail = "B = " + b.to_string() + ", e_HK = 4, max deviation " + format_double(dev);
  return o;
}

Outcome dimension_one() {
  Outcome o;
  const auto np = cusp_problem();
  const auto s = hilbert_samuel(series_of_ring(np.problem.ring()));
  require(o, s.dimension == 1 && s.multiplicity == 1,
          "hilbert_samuel = (" + std::to_string(s.dimension) + ", " + s.multiplicity.get_str() + ")");
  const double dev = max_deviation(np.problem, 10, [](cplx y) { return (1.0 - std::exp(-2.0 * I * y)) / (I * y); });
  require(o, dev <= 1e-2, "deviation " + format_double(dev));
  if (o.passed) o.detail = "(d, e) = (1, 1), max deviation " + format_double(dev);
  return o;
}

Outcome from_property(const PropertyResult& r) { return {r.passed, r.detail}; }

Outcome ab_identity() { return from_property(check_ab_identity(standard_suite(), 6)); }

Outcome density_bridge() {
  const auto suite = standard_suite();
  Outcome o = from_property(check_density_bridge(suite, 8, real_grid(-4, 4, 17)));
  const auto t = density_table(plane_problem(2).problem, 8);
  double worst = 0;
  for (int k = 0; k <= 4000; ++k) {
    const double x = 2.0 * k / 4000.0;
    worst = std::max(worst, std::abs(t.at(x) - std::min(x, 2.0 - x)));
  }
  require(o, worst <= std::ldexp(1.0, -7), "tent deviation " + format_double(worst));
  if (o.passed) o.detail += "; tent deviation " + format_double(worst) + " <= 2^-7";
  return o;
}

Outcome moment_estimator() {
  Outcome o;
  const auto np = plane_problem(2);
  const auto t = np.problem.table(10);
  Rational a0(t->moment(0), t->q() * t->q());
  a0.canonicalize();
  require(o, a0 == 1, "a_0 = " + a0.get_str());
  const cplx a1 = series_coefficient_estimate(np.problem, 1, 10);
  const double dev = std::abs(a1 - cplx(0.0, -1.0));
  require(o, dev <= 2e-2, "|a_1 + i| = " + format_double(dev));
  if (o.passed) o.detail = "a_0 = 1, |a_1 + i| = " + format_double(dev);
  return o;
}

Outcome hn_evaluator() {
  Outcome o;
  const HNData plane{1, 1, {{Rational(-1), 1}}};
  const std::vector<std::uint32_t> deg{1, 1};
  require(o, models_equal(model_from_hn(plane), model_hsop(1, deg), 0.0), "HN model differs from hsop model");
  HNData bad = plane;
  bad.factors[0].mu = Rational(-2);
  bool rejected = false;
  try {
    validate_hn(bad);
  } catch (const std::exception&) {
    rejected = true;
  }
  require(o, rejected, "sum mu r != -delta_R accepted");
  if (o.passed) o.detail = "HN model equals hsop model exactly; invalid data rejected";
  return o;
}

Outcome oracle_suites() {
  const auto a = check_staircase_vs_enumeration(200, 20240601);
  const auto b = check_groebner_vs_macaulay(50, 20240602, 12);
  return {a.passed && b.passed, a.detail + "; " + b.detail};
}

Outcome symmetry_and_decay() {
  const auto suite = standard_suite();
  const std::vector<double> ys{0.25, 0.5, 1.0, 2.0, 3.0, 4.0};
  const auto a = check_conjugate_symmetry(suite, ys, 1e-12);
  const auto b = check_cauchy_decay(suite, real_grid(-4, 4, 17));
  return {a.passed && b.passed, "symmetry " + a.detail + "; decay " + b.detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 regular ring e_HK", 1, regular_ring_hk},
      {"2 parameter ideal multiplicities", 5, parameter_ideals},
      {"3 product formula convergence", 10, product_formula},
      {"4 finite projective dimension closed form", 20, finite_pd},
      {"5 dimension one formula", 20, dimension_one},
      {"6 exact AB identity", 30, ab_identity},
      {"7 density bridge and tent shape", 30, density_bridge},
      {"8 moment estimator", 10, moment_estimator},
      {"9 HN evaluator", 1, hn_evaluator},
      {"10 oracle suites", 120, oracle_suites},
      {"11 symmetry and decay", 120, symmetry_and_decay},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.passed = false;
      o.detail += "; over the time budget";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, " (%.2f s, budget %g s)", secs, c.budget_seconds);
    std::cout << (o.passed ? "PASS " : "FAIL ") << c.name << ": " << o.detail << timing << "\n";
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
