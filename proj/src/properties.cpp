#include "fpf/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "fpf/density.hpp"
#include "fpf/fp_core.hpp"
#include "fpf/groebner.hpp"
#include "fpf/hilbert_series.hpp"
#include "fpf/kernels.hpp"
#include "fpf/macaulay.hpp"
#include "fpf/number_format.hpp"
#include "fpf/staircase.hpp"

namespace fpf {

namespace {

using cplx = std::complex<double>;

std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

struct RandomMonomialIdeal {
  Grading grading;
  std::vector<ExponentVector> gens;
};

RandomMonomialIdeal random_zero_dim_ideal(std::mt19937_64& rng) {
  const std::size_t nvars = uniform(rng, 1, 4);
  std::vector<std::uint32_t> weights(nvars);
  for (auto& w : weights) w = uniform(rng, 1, 3);
  std::vector<ExponentVector> gens;
  for (std::size_t v = 0; v < nvars; ++v) {
    ExponentVector e(nvars, 0);
    e[v] = uniform(rng, 1, 6);
    gens.push_back(std::move(e));
  }
  const std::uint32_t extra = uniform(rng, 0, static_cast<std::uint32_t>(6 - nvars));
  for (std::uint32_t k = 0; k < extra; ++k) {
    ExponentVector e(nvars);
    for (auto& x : e) x = uniform(rng, 0, 6);
    gens.push_back(std::move(e));
  }
  return {Grading(std::move(weights)), std::move(gens)};
}

Polynomial random_homogeneous(std::mt19937_64& rng, const PolyRingPtr& ring, std::int64_t degree) {
  const auto monomials = monomials_of_degree(ring->grading, degree);
  std::vector<Term> terms;
  const std::uint32_t p = ring->field.characteristic();
  for (const auto& m : monomials)
    if (uniform(rng, 0, 2) == 0) terms.push_back({m, uniform(rng, 1, p - 1)});
  if (terms.empty() && !monomials.empty())
    terms.push_back({monomials[uniform(rng, 0, static_cast<std::uint32_t>(monomials.size() - 1))], 1});
  return Polynomial(ring, std::move(terms));
}

std::string describe(const std::vector<ExponentVector>& gens) {
  std::ostringstream os;
  for (const auto& g : gens) {
    os << "(";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << ")";
  }
  return os.str();
}

void fail(PropertyResult& r, const std::string& why) {
  if (r.passed) r.detail = why;
  r.passed = false;
}

}  // namespace

std::vector<cplx> real_grid(double lo, double hi, unsigned count) {
  std::vector<cplx> ys;
  for (unsigned k = 0; k < count; ++k)
    ys.emplace_back(count == 1 ? lo : lo + (hi - lo) * k / (count - 1), 0.0);
  return ys;
}

PropertyResult check_staircase_vs_enumeration(unsigned count, std::uint64_t seed) {
  PropertyResult r{"staircase_vs_enumeration", true, ""};
  std::mt19937_64 rng(seed);
  for (unsigned k = 0; k < count && r.passed; ++k) {
    const auto sample = random_zero_dim_ideal(rng);
    const MonomialIdeal ideal(sample.grading.var_count(), sample.gens);
    if (staircase_counts(ideal, sample.grading) != enumeration_oracle(ideal, sample.grading))
      fail(r, "mismatch for generators " + describe(ideal.generators()));
  }
  if (r.passed) r.detail = std::to_string(count) + " random ideals agree";
  return r;
}

PropertyResult check_groebner_vs_macaulay(unsigned count, std::uint64_t seed, std::int64_t max_degree) {
  PropertyResult r{"groebner_vs_macaulay", true, ""};
  std::mt19937_64 rng(seed);
  for (unsigned k = 0; k < count && r.passed; ++k) {
    const std::uint32_t p = uniform(rng, 0, 1) ? 3 : 2;
    const std::size_t nvars = uniform(rng, 1, 3);
    std::vector<std::uint32_t> weights(nvars, 1);
    if (uniform(rng, 0, 3) == 0)
      for (auto& w : weights) w = uniform(rng, 1, 2);
    const auto ring = make_poly_ring(p, weights);
    std::vector<Polynomial> relations;
    if (uniform(rng, 0, 3) == 0) {
      auto rel = random_homogeneous(rng, ring, uniform(rng, 2, 3));
      if (!rel.is_zero()) relations.push_back(std::move(rel));
    }
    std::vector<Polynomial> gens;
    const std::uint32_t ngens = uniform(rng, 1, 3);
    for (std::uint32_t g = 0; g < ngens; ++g) {
      auto f = random_homogeneous(rng, ring, uniform(rng, 1, 4));
      if (!f.is_zero()) gens.push_back(std::move(f));
    }
    if (gens.empty()) continue;
    const RingPresentation R(ring, relations);
    std::vector<Polynomial> all = relations;
    all.insert(all.end(), gens.begin(), gens.end());
    const MonomialIdeal in = initial_ideal(buchberger(all));
    for (std::int64_t j = 0; j <= max_degree && r.passed; ++j) {
      std::size_t standard = 0;
      for (const auto& m : monomials_of_degree(ring->grading, j))
        if (!in.contains(m)) ++standard;
      const std::size_t oracle = macaulay_rank_oracle(R, gens, j);
      if (standard != oracle) {
        std::string text;
        for (const auto& f : all) text += " [" + f.to_string() + "]";
        fail(r, "degree " + std::to_string(j) + ": " + std::to_string(standard) + " vs " + std::to_string(oracle) +
                    " for p=" + std::to_string(p) + text);
      }
    }
  }
  if (r.passed) r.detail = std::to_string(count) + " random ideals agree up to degree " + std::to_string(max_degree);
  return r;
}

PropertyResult check_ab_identity(std::span<const NamedProblem> suite, unsigned n_max) {
  PropertyResult r{"ab_identity", true, ""};
  unsigned checked = 0;
  for (const auto& np : suite) {
    const unsigned top = std::min(n_max, np.n_max);
    for (unsigned n = 0; n <= top && r.passed; ++n) {
      const HilbertSeries table = series_of_table(*np.problem.table(n));
      const HilbertSeries product(betti_alternating_polynomial(np.problem, np.hsop_degrees, n), np.hsop_degrees);
      if (!same_rational_function(table, product)) fail(r, np.name + " n=" + std::to_string(n));
      ++checked;
    }
  }
  if (r.passed) r.detail = std::to_string(checked) + " (problem, n) pairs exact";
  return r;
}

PropertyResult check_density_bridge(std::span<const NamedProblem> suite, unsigned n_max, std::span<const cplx> ys,
                                    double tol) {
  PropertyResult r{"density_bridge", true, ""};
  double worst = 0;
  for (const auto& np : suite) {
    if (np.problem.dimension() == 0) continue;
    const unsigned top = std::min(n_max, np.n_max);
    for (unsigned n = 0; n <= top && r.passed; ++n) {
      const DensityTable t = density_table(np.problem, n);
      if (t.mass() != hk_multiplicity(np.problem, n)) fail(r, np.name + " n=" + std::to_string(n) + ": mass != F_n(0)");
      if (gn_fourier_exact(np.problem, n, 0.0) != cplx(t.mass().get_d(), 0.0))
        fail(r, np.name + " n=" + std::to_string(n) + ": ghat(0) != F_n(0)");
      for (const auto& y : ys) {
        const double dev = std::abs(gn_fourier_exact(np.problem, n, y) - quadrature_fourier(t, y));
        worst = std::max(worst, dev);
        if (dev > tol) fail(r, np.name + " n=" + std::to_string(n) + ": deviation " + format_double(dev));
      }
    }
  }
  if (r.passed) r.detail = "max deviation " + format_double(worst);
  return r;
}

PropertyResult check_conjugate_symmetry(std::span<const NamedProblem> suite, std::span<const double> ys, double tol) {
  PropertyResult r{"conjugate_symmetry", true, ""};
  double worst = 0;
  for (const auto& np : suite) {
    std::vector<cplx> grid;
    for (double y : ys) {
      grid.emplace_back(y, 0.0);
      grid.emplace_back(-y, 0.0);
    }
    const unsigned n = std::min(np.n_max, 8u);
    const auto values = fn_eval_grid(np.problem, n, grid);
    for (std::size_t k = 0; k < values.size(); k += 2) {
      const double dev = std::abs(values[k + 1] - std::conj(values[k]));
      worst = std::max(worst, dev);
      if (dev > tol) fail(r, np.name + " y=" + format_double(grid[k].real()));
    }
  }
  if (r.passed) r.detail = "max deviation " + format_double(worst);
  return r;
}

PropertyResult check_cauchy_decay(std::span<const NamedProblem> suite, std::span<const cplx> ys) {
  PropertyResult r{"cauchy_decay", true, ""};
  double worst_margin = -1;
  std::string worst_case;
  for (const auto& np : suite) {
    const double p = np.problem.prime();
    const double limit = 1.0 / p + 0.2;
    const auto report = fp_limit(np.problem, ys, np.n_max);
    const auto& sup = report.sup_differences;
    for (std::size_t m = 3; m + 1 < sup.size(); ++m) {
      if (sup[m] == 0) continue;
      const double ratio = sup[m + 1] / sup[m];
      if (ratio - limit > worst_margin) {
        worst_margin = ratio - limit;
        worst_case = np.name + " m=" + std::to_string(m) + " ratio " + format_double(ratio);
      }
      if (ratio > limit) fail(r, np.name + " m=" + std::to_string(m) + ": ratio " + format_double(ratio));
    }
  }
  if (r.passed) r.detail = "closest case: " + worst_case;
  return r;
}

PropertyResult check_kernels_agree(unsigned count, std::uint64_t seed) {
  PropertyResult r{"kernels_agree", true, ""};
  std::mt19937_64 rng(seed);
  for (unsigned k = 0; k < count && r.passed; ++k) {
    const auto sample = random_zero_dim_ideal(rng);
    const MonomialIdeal ideal(sample.grading.var_count(), sample.gens);
    const auto& gens = ideal.generators();
    if (kernels::inclusion_exclusion_numerator(gens, sample.grading) !=
        kernels::serial::inclusion_exclusion_numerator(gens, sample.grading))
      fail(r, "inclusion_exclusion mismatch for " + describe(gens));
    const auto box = ideal.bounding_box();
    if (kernels::enumerate_staircase(gens, sample.grading, box) !=
        kernels::serial::enumerate_staircase(gens, sample.grading, box))
      fail(r, "enumerate_staircase mismatch for " + describe(gens));
  }
  std::vector<double> coeffs(200);
  for (auto& c : coeffs) c = std::uniform_real_distribution<double>(0, 10)(rng);
  std::vector<cplx> ys;
  for (int k = 0; k < 64; ++k)
    ys.emplace_back(std::uniform_real_distribution<double>(-5, 5)(rng), std::uniform_real_distribution<double>(-1, 1)(rng));
  const auto a = kernels::exponential_sum(coeffs, 1.0 / 64, ys);
  const auto b = kernels::serial::exponential_sum(coeffs, 1.0 / 64, ys);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) > 1e-12) fail(r, "exponential_sum mismatch");
  if (r.passed) r.detail = std::to_string(count) + " random ideals and 64 sample points agree";
  return r;
}

}  // namespace fpf
