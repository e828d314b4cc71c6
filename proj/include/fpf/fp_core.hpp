#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fpf/laurent.hpp"
#include "fpf/problem.hpp"

namespace fpf {

using cplx = std::complex<double>;

/// F_n(y) = p^(-nd) sum_j l_j exp(-i y j / p^n).  At y = 0 the exact rational is converted.
cplx fn_eval(const ProblemSpec& P, unsigned n, cplx y);
std::vector<cplx> fn_eval_grid(const ProblemSpec& P, unsigned n, std::span<const cplx> ys);

/// sum_j c_j exp(-i y j / q) in extended precision, exponent by exponent.
cplx phase_sum(const LaurentPolynomialZ& c, cplx y, const BigInt& q);

/// 1 - exp(-i x) without cancellation for small x.
cplx one_minus_exp_neg_i(cplx x);

struct LimitEstimate {
  cplx value;
  unsigned n_used = 0;
  double error_bound = 0;
  /// D = max_{m < n_used} p^m |F_{m+1}(y) - F_m(y)|
  double cauchy_constant = 0;
  /// |F_n - F_{n-1}| / |F_{n-1} - F_{n-2}| (0 when undefined)
  double decay_ratio = 0;
  /// |F_{m+1}(y) - F_m(y)| for m = 0..n_used-1
  std::vector<double> differences;
};

struct LimitReport {
  std::vector<cplx> ys;
  std::vector<LimitEstimate> estimates;
  /// sup over the grid of |F_{m+1} - F_m|, m = 0..n_max-1
  std::vector<double> sup_differences;
};

/// Requires n_max >= 2.
LimitReport fp_limit(const ProblemSpec& P, std::span<const cplx> ys, unsigned n_max);

/// p^(-nd) * length(R / I^[p^n]), exact.
Rational hk_multiplicity(const ProblemSpec& P, unsigned n);

/// (-i)^m / m! * p^(-n(d+m)) * sum_j j^m l_j.
cplx series_coefficient_estimate(const ProblemSpec& P, unsigned m, unsigned n);

/// H_{R/I^[p^n]}(t) * prod (1 - t^delta_i): the alternating Betti sums over k[hsop].
LaurentPolynomialZ betti_alternating_polynomial(const ProblemSpec& P, std::span<const std::uint32_t> hsop_degrees,
                                               unsigned n);

struct BettiCheck {
  /// |p^(-nd) B_n(t) / prod(1 - t^delta) - F_n(y)| with t = exp(-iy/p^n): the exact identity.
  std::vector<double> identity_deviation;
  /// |e_S B_n(t) / (iy)^d - F_n(y)|: differs by a correction factor that tends to 1.
  std::vector<double> limit_form_deviation;
  double max_identity_deviation = 0;
  double max_limit_form_deviation = 0;
};

/// Compares the level-n Betti expressions with F_n on a grid that avoids 0.
BettiCheck betti_limit_check(const ProblemSpec& P, std::span<const std::uint32_t> hsop_degrees,
                             std::span<const cplx> ys, unsigned n);

/// chi(R/(hsop), R/I^[p^n])(exp(-iy/p^n)) / (prod delta_i * (iy)^d).  y = 0 throws std::domain_error.
cplx cm_chi_eval(const ProblemSpec& P, std::span<const std::uint32_t> hsop_degrees, unsigned n, cplx y);

/// The exact factor cm_chi_eval / fn_eval = prod_i q (1 - exp(-i y delta_i / q)) / (i y delta_i).
cplx cm_correction_factor(std::span<const std::uint32_t> hsop_degrees, const BigInt& q, cplx y);

}  // namespace fpf
