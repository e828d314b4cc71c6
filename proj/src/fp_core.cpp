#include "fpf/fp_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fpf/errors.hpp"
#include "fpf/hilbert_series.hpp"
#include "fpf/kernels.hpp"

namespace fpf {

namespace {

BigInt big_pow(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace

cplx one_minus_exp_neg_i(cplx x) {
  // 1 - e^{-ix} = 2i sin(x/2) e^{-ix/2}
  const cplx i(0, 1);
  return 2.0 * i * std::sin(x / 2.0) * std::exp(-i * x / 2.0);
}

cplx phase_sum(const LaurentPolynomialZ& c, cplx y, const BigInt& q) {
  using lcplx = std::complex<long double>;
  const lcplx step = lcplx(y.real(), y.imag()) / static_cast<long double>(q.get_d());
  lcplx s = 0;
  const auto& dense = c.dense();
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (dense[k] == 0) continue;
    const long double j = static_cast<long double>(c.low_degree() + static_cast<long>(k));
    const lcplx phase = step * j;
    // exp(-i * phase)
    const lcplx e = std::exp(lcplx(phase.imag(), -phase.real()));
    s += static_cast<long double>(dense[k].get_d()) * e;
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

Rational hk_multiplicity(const ProblemSpec& P, unsigned n) {
  const auto t = P.table(n);
  Rational r(t->total(), big_pow(t->q(), P.dimension()));
  r.canonicalize();
  return r;
}

std::vector<cplx> fn_eval_grid(const ProblemSpec& P, unsigned n, std::span<const cplx> ys) {
  const auto t = P.table(n);
  const BigInt q = t->q();
  const BigInt qd = big_pow(q, P.dimension());
  std::vector<double> coeffs(t->lengths.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = to_double(Rational(t->lengths[j], qd));
  auto values = kernels::exponential_sum(coeffs, 1.0 / q.get_d(), ys);
  const double at_zero = to_double(hk_multiplicity(P, n));
  for (std::size_t k = 0; k < ys.size(); ++k)
    if (ys[k] == cplx(0, 0)) values[k] = at_zero;
  return values;
}

cplx fn_eval(const ProblemSpec& P, unsigned n, cplx y) { return fn_eval_grid(P, n, std::span<const cplx>(&y, 1)).front(); }

LimitReport fp_limit(const ProblemSpec& P, std::span<const cplx> ys, unsigned n_max) {
  if (n_max < 2) throw std::invalid_argument("fp_limit: n_max must be at least 2");
  P.prefetch_tables(n_max);
  std::vector<std::vector<cplx>> levels;
  levels.reserve(n_max + 1);
  for (unsigned m = 0; m <= n_max; ++m) levels.push_back(fn_eval_grid(P, m, ys));

  const double p = P.prime();
  LimitReport report;
  report.ys.assign(ys.begin(), ys.end());
  report.sup_differences.assign(n_max, 0.0);
  for (std::size_t k = 0; k < ys.size(); ++k) {
    LimitEstimate e;
    e.value = levels[n_max][k];
    e.n_used = n_max;
    double scale = 1;
    for (unsigned m = 0; m < n_max; ++m) {
      const double diff = std::abs(levels[m + 1][k] - levels[m][k]);
      e.differences.push_back(diff);
      e.cauchy_constant = std::max(e.cauchy_constant, scale * diff);
      report.sup_differences[m] = std::max(report.sup_differences[m], diff);
      scale *= p;
    }
    e.error_bound = e.cauchy_constant / std::pow(p, n_max) * p / (p - 1);
    const double prev = e.differences[n_max - 2];
    e.decay_ratio = prev > 0 ? e.differences[n_max - 1] / prev : 0.0;
    report.estimates.push_back(std::move(e));
  }
  return report;
}

cplx series_coefficient_estimate(const ProblemSpec& P, unsigned m, unsigned n) {
  const auto t = P.table(n);
  BigInt denom = big_pow(t->q(), P.dimension() + m);
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), m);
  Rational r(t->moment(m), denom * factorial);
  r.canonicalize();
  const double magnitude = to_double(r);
  static const cplx minus_i_powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return magnitude * minus_i_powers[m % 4];
}

LaurentPolynomialZ betti_alternating_polynomial(const ProblemSpec& P, std::span<const std::uint32_t> hsop_degrees,
                                               unsigned n) {
  const HilbertSeries h_s(LaurentPolynomialZ::constant(1), {hsop_degrees.begin(), hsop_degrees.end()});
  const HilbertSeries chi = chi_series(series_of_table(*P.table(n)), residue_field_series(), h_s);
  if (!chi.denominator_degrees.empty()) throw invariant_error("betti_alternating_polynomial: result is not a polynomial");
  return chi.numerator;
}

cplx cm_correction_factor(std::span<const std::uint32_t> hsop_degrees, const BigInt& q, cplx y) {
  const cplx i(0, 1);
  const double qd = q.get_d();
  cplx f = 1;
  for (auto delta : hsop_degrees) f *= qd * one_minus_exp_neg_i(y * static_cast<double>(delta) / qd) / (i * y * static_cast<double>(delta));
  return f;
}

BettiCheck betti_limit_check(const ProblemSpec& P, std::span<const std::uint32_t> hsop_degrees,
                             std::span<const cplx> ys, unsigned n) {
  const auto b = betti_alternating_polynomial(P, hsop_degrees, n);
  const BigInt q = P.table(n)->q();
  const unsigned d = P.dimension();
  const double qd = q.get_d();
  const auto f = fn_eval_grid(P, n, ys);
  double delta_product = 1;
  for (auto delta : hsop_degrees) delta_product *= delta;
  const cplx i(0, 1);

  BettiCheck out;
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const cplx y = ys[k];
    if (y == cplx(0, 0)) throw std::domain_error("betti_limit_check: grid must avoid y = 0");
    const cplx bt = phase_sum(b, y, q);
    cplx den = 1;
    for (auto delta : hsop_degrees) den *= one_minus_exp_neg_i(y * static_cast<double>(delta) / qd);
    const cplx identity = bt / (den * std::pow(qd, static_cast<double>(d)));
    const cplx limit_form = bt / (delta_product * std::pow(i * y, static_cast<int>(hsop_degrees.size())));
    out.identity_deviation.push_back(std::abs(identity - f[k]));
    out.limit_form_deviation.push_back(std::abs(limit_form - f[k]));
    out.max_identity_deviation = std::max(out.max_identity_deviation, out.identity_deviation.back());
    out.max_limit_form_deviation = std::max(out.max_limit_form_deviation, out.limit_form_deviation.back());
  }
  return out;
}

cplx cm_chi_eval(const ProblemSpec& P, std::span<const std::uint32_t> hsop_degrees, unsigned n, cplx y) {
  if (y == cplx(0, 0)) throw std::domain_error("cm_chi_eval: y = 0 (use the series path)");
  const HilbertSeries h_r = series_of_ring(P.ring());
  LaurentPolynomialZ quotient_num = h_r.numerator;
  for (auto delta : hsop_degrees) quotient_num = quotient_num.times_one_minus_t_pow(delta);
  const HilbertSeries h_quotient(quotient_num, h_r.denominator_degrees);
  const HilbertSeries chi = chi_series(h_quotient, series_of_table(*P.table(n)), h_r);
  if (!chi.denominator_degrees.empty()) throw invariant_error("cm_chi_eval: chi series is not a polynomial");
  const cplx i(0, 1);
  double delta_product = 1;
  for (auto delta : hsop_degrees) delta_product *= delta;
  return phase_sum(chi.numerator, y, P.table(n)->q()) /
         (delta_product * std::pow(i * y, static_cast<int>(hsop_degrees.size())));
}

}  // namespace fpf
