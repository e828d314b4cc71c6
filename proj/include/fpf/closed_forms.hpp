#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "fpf/laurent.hpp"

namespace fpf {

/// c * exp(-i rho y).  `exact` holds c when it is known to be rational.
struct ModelTerm {
  std::complex<double> c;
  Rational rho;
  std::optional<Rational> exact;

  static ModelTerm rational(const Rational& c, const Rational& rho) { return {{c.get_d(), 0.0}, rho, c}; }
};

/// sum_k c_k exp(-i rho_k y) / (iy)^d.  Terms are merged by frequency, sorted by
/// frequency, and zero coefficients dropped.  The numerator must vanish to order d
/// at y = 0 (sum_k c_k rho_k^m = 0 for m < d); construction throws invariant_error otherwise.
class ExponentialPolynomialModel {
 public:
  ExponentialPolynomialModel(unsigned d, std::vector<ModelTerm> terms);

  unsigned pole_order() const noexcept { return d_; }
  const std::vector<ModelTerm>& terms() const noexcept { return terms_; }
  bool is_exact() const noexcept;

  /// a_m of the expansion F(y) = sum_m a_m y^m around 0.
  std::complex<double> taylor_coefficient(unsigned m) const;

 private:
  unsigned d_;
  std::vector<ModelTerm> terms_;
};

inline constexpr double model_taylor_radius = 1e-3;
inline constexpr unsigned model_taylor_terms = 14;

/// Direct formula for |y| > 1e-3, Taylor expansion of the removable singularity inside.
std::complex<double> eval_model(const ExponentialPolynomialModel& m, std::complex<double> y);

/// e_R * prod_j (1 - exp(-i delta_j y)) / (iy).
ExponentialPolynomialModel model_hsop(const Rational& e_r, std::span<const std::uint32_t> degrees);

/// e_R * (1 - exp(-i h y)) / (iy).
ExponentialPolynomialModel model_dim_one(const Rational& e_r, std::uint32_t h);

/// e_R * sum_j B_j exp(-i j y) / (iy)^d.
ExponentialPolynomialModel model_finite_pd(const Rational& e_r, const LaurentPolynomialZ& b, unsigned d);

struct HNFactor {
  Rational mu;
  long rank;
};

struct HNData {
  long delta_r = 0;
  long rank_s = 0;
  std::vector<HNFactor> factors;
};

/// Throws invariant_error naming the first violated condition.
void validate_hn(const HNData& h);

/// delta_R (1 - (1 + rk S) e^{-iy} + sum_j r_j e^{-iy(1 - mu_j/delta_R)}) / (iy)^2.
ExponentialPolynomialModel model_from_hn(const HNData& h);

/// Same pole order and term lists with equal frequencies and |c_a - c_b| <= tol.
bool models_equal(const ExponentialPolynomialModel& a, const ExponentialPolynomialModel& b, double tol);

nlohmann::json model_to_json(const ExponentialPolynomialModel& m);
ExponentialPolynomialModel model_from_json(const nlohmann::json& j);

}  // namespace fpf
