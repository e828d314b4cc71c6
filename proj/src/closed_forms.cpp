#include "fpf/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "fpf/errors.hpp"

namespace fpf {

namespace {

using cplx = std::complex<double>;

Rational rational_pow(const Rational& r, unsigned e) {
  Rational out(1);
  for (unsigned k = 0; k < e; ++k) out *= r;
  return out;
}

double factorial(unsigned k) {
  double f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

// S_j = sum_k c_k rho_k^j, exact when every coefficient is rational.
cplx power_sum(const std::vector<ModelTerm>& terms, unsigned j, bool exact) {
  if (exact) {
    Rational s(0);
    for (const auto& t : terms) s += *t.exact * rational_pow(t.rho, j);
    return {s.get_d(), 0.0};
  }
  cplx s = 0;
  for (const auto& t : terms) s += t.c * std::pow(t.rho.get_d(), static_cast<int>(j));
  return s;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

ExponentialPolynomialModel::ExponentialPolynomialModel(unsigned d, std::vector<ModelTerm> terms) : d_(d) {
  std::sort(terms.begin(), terms.end(), [](const ModelTerm& a, const ModelTerm& b) { return a.rho < b.rho; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().rho == t.rho) {
      auto& last = terms_.back();
      last.c += t.c;
      if (last.exact && t.exact) {
        *last.exact += *t.exact;
        last.c = {last.exact->get_d(), 0.0};
      } else {
        last.exact.reset();
      }
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const ModelTerm& t) { return t.exact ? *t.exact == 0 : t.c == cplx(0, 0); });

  for (unsigned m = 0; m < d_; ++m) {
    if (is_exact()) {
      Rational s(0);
      for (const auto& t : terms_) s += *t.exact * rational_pow(t.rho, m);
      if (s != 0)
        throw invariant_error("model: numerator does not vanish to order " + std::to_string(d_) +
                              " at 0 (power sum of order " + std::to_string(m) + " is " + rational_text(s) + ")");
    } else {
      double scale = 0;
      for (const auto& t : terms_) scale += std::abs(t.c) * std::pow(std::abs(t.rho.get_d()), static_cast<int>(m));
      const cplx s = power_sum(terms_, m, false);
      if (std::abs(s) > 1e-9 * std::max(scale, 1.0))
        throw invariant_error("model: numerator does not vanish to order " + std::to_string(d_) +
                              " at 0 (power sum of order " + std::to_string(m) + " is nonzero)");
    }
  }
}

bool ExponentialPolynomialModel::is_exact() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const ModelTerm& t) { return t.exact.has_value(); });
}

cplx ExponentialPolynomialModel::taylor_coefficient(unsigned m) const {
  // a_m = (-i)^m (-1)^d S_{m+d} / (m+d)!
  static const cplx minus_i_powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  const cplx s = power_sum(terms_, m + d_, is_exact());
  const double sign = d_ % 2 ? -1.0 : 1.0;
  return minus_i_powers[m % 4] * sign * s / factorial(m + d_);
}

cplx eval_model(const ExponentialPolynomialModel& m, cplx y) {
  if (std::abs(y) > model_taylor_radius) {
    const cplx i(0, 1);
    cplx num = 0;
    for (const auto& t : m.terms()) num += t.c * std::exp(-i * t.rho.get_d() * y);
    return num / std::pow(i * y, static_cast<int>(m.pole_order()));
  }
  cplx value = 0;
  cplx power = 1;
  for (unsigned k = 0; k < model_taylor_terms; ++k) {
    value += m.taylor_coefficient(k) * power;
    power *= y;
  }
  return value;
}

ExponentialPolynomialModel model_hsop(const Rational& e_r, std::span<const std::uint32_t> degrees) {
  if (e_r <= 0) throw invariant_error("model_hsop: e_R must be positive");
  std::vector<ModelTerm> terms{ModelTerm::rational(e_r, 0)};
  for (auto delta : degrees) {
    if (delta == 0) throw invariant_error("model_hsop: degrees must be positive");
    std::vector<ModelTerm> next;
    for (const auto& t : terms) {
      next.push_back(t);
      next.push_back(ModelTerm::rational(-*t.exact, t.rho + Rational(delta)));
    }
    terms = std::move(next);
  }
  return ExponentialPolynomialModel(static_cast<unsigned>(degrees.size()), std::move(terms));
}

ExponentialPolynomialModel model_dim_one(const Rational& e_r, std::uint32_t h) {
  if (e_r <= 0) throw invariant_error("model_dim_one: e_R must be positive");
  if (h == 0) throw invariant_error("model_dim_one: h must be positive");
  return ExponentialPolynomialModel(1, {ModelTerm::rational(e_r, 0), ModelTerm::rational(-e_r, Rational(h))});
}

ExponentialPolynomialModel model_finite_pd(const Rational& e_r, const LaurentPolynomialZ& b, unsigned d) {
  if (e_r <= 0) throw invariant_error("model_finite_pd: e_R must be positive");
  std::vector<ModelTerm> terms;
  const auto& dense = b.dense();
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) terms.push_back(ModelTerm::rational(e_r * Rational(dense[k]), Rational(b.low_degree() + static_cast<long>(k))));
  return ExponentialPolynomialModel(d, std::move(terms));
}

void validate_hn(const HNData& h) {
  if (h.delta_r <= 0) throw invariant_error("HN data: delta_R must be positive");
  if (h.rank_s <= 0) throw invariant_error("HN data: rank_S must be positive");
  if (h.factors.empty()) throw invariant_error("HN data: at least one factor is required");
  long rank_sum = 0;
  Rational degree_sum(0);
  for (std::size_t k = 0; k < h.factors.size(); ++k) {
    const auto& f = h.factors[k];
    if (f.rank <= 0) throw invariant_error("HN data: factor " + std::to_string(k + 1) + " has nonpositive rank");
    if (k > 0 && !(f.mu < h.factors[k - 1].mu))
      throw invariant_error("HN data: slopes must be strictly decreasing (factor " + std::to_string(k + 1) + ")");
    rank_sum += f.rank;
    degree_sum += f.mu * Rational(f.rank);
  }
  if (rank_sum != h.rank_s)
    throw invariant_error("HN data: sum of ranks r_s is " + std::to_string(rank_sum) + ", expected rank_S = " +
                          std::to_string(h.rank_s));
  if (degree_sum != Rational(-h.delta_r))
    throw invariant_error("HN data: sum of mu_s * r_s is " + rational_text(degree_sum) + ", expected -delta_R = " +
                          std::to_string(-h.delta_r));
}

ExponentialPolynomialModel model_from_hn(const HNData& h) {
  validate_hn(h);
  const Rational delta(h.delta_r);
  std::vector<ModelTerm> terms{ModelTerm::rational(delta, 0), ModelTerm::rational(-delta * Rational(1 + h.rank_s), 1)};
  for (const auto& f : h.factors) {
    Rational rho = 1 - f.mu / delta;
    rho.canonicalize();
    terms.push_back(ModelTerm::rational(delta * Rational(f.rank), rho));
  }
  return ExponentialPolynomialModel(2, std::move(terms));
}

bool models_equal(const ExponentialPolynomialModel& a, const ExponentialPolynomialModel& b, double tol) {
  if (a.pole_order() != b.pole_order() || a.terms().size() != b.terms().size()) return false;
  for (std::size_t k = 0; k < a.terms().size(); ++k) {
    const auto& ta = a.terms()[k];
    const auto& tb = b.terms()[k];
    if (ta.rho != tb.rho) return false;
    if (ta.exact && tb.exact && tol == 0.0) {
      if (*ta.exact != *tb.exact) return false;
    } else if (std::abs(ta.c - tb.c) > tol) {
      return false;
    }
  }
  return true;
}

nlohmann::json model_to_json(const ExponentialPolynomialModel& m) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : m.terms()) {
    nlohmann::json term{{"c_re", t.c.real()}, {"c_im", t.c.imag()}};
    const BigInt& num = t.rho.get_num();
    const BigInt& den = t.rho.get_den();
    if (num.fits_slong_p() && den.fits_slong_p()) {
      term["rho_num"] = num.get_si();
      term["rho_den"] = den.get_si();
    } else {
      term["rho_num"] = num.get_str();
      term["rho_den"] = den.get_str();
    }
    if (t.exact) term["c_exact"] = t.exact->get_str();
    terms.push_back(std::move(term));
  }
  return {{"d", m.pole_order()}, {"terms", std::move(terms)}};
}

ExponentialPolynomialModel model_from_json(const nlohmann::json& j) {
  auto big = [](const nlohmann::json& v) { return v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long>()); };
  std::vector<ModelTerm> terms;
  for (const auto& t : j.at("terms")) {
    Rational rho(big(t.at("rho_num")), big(t.at("rho_den")));
    rho.canonicalize();
    if (t.contains("c_exact")) {
      Rational c(t.at("c_exact").get<std::string>());
      c.canonicalize();
      terms.push_back(ModelTerm::rational(c, rho));
    } else {
      terms.push_back({{t.at("c_re").get<double>(), t.at("c_im").get<double>()}, rho, std::nullopt});
    }
  }
  return ExponentialPolynomialModel(j.at("d").get<unsigned>(), std::move(terms));
}

}  // namespace fpf
