#include "fpf/density.hpp"

#include <cmath>

#include "fpf/errors.hpp"
#include "fpf/fp_core.hpp"
#include "fpf/number_format.hpp"

namespace fpf {

namespace {

// sin(z) / z
std::complex<double> sinc(std::complex<double> z) {
  if (std::abs(z) < 1e-4) return 1.0 - z * z / 6.0 + z * z * z * z / 120.0;
  return std::sin(z) / z;
}

}  // namespace

BigInt DensityTable::q() const {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, n);
  return r;
}

Rational DensityTable::value(std::size_t j) const {
  if (j >= lengths.size()) return 0;
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), q().get_mpz_t(), d - 1);
  Rational r(lengths[j], scale);
  r.canonicalize();
  return r;
}

Rational DensityTable::x(std::size_t j) const {
  Rational r(BigInt(static_cast<unsigned long>(j)), q());
  r.canonicalize();
  return r;
}

Rational DensityTable::mass() const {
  Rational s(0);
  for (std::size_t j = 0; j < lengths.size(); ++j) s += value(j);
  s /= Rational(q());
  return s;
}

double DensityTable::at(double x) const {
  if (x < 0) return 0.0;
  const double j = std::floor(x * q().get_d());
  if (j >= static_cast<double>(lengths.size())) return 0.0;
  return value(static_cast<std::size_t>(j)).get_d();
}

DensityTable density_table(const ProblemSpec& P, unsigned n) {
  const unsigned d = P.dimension();
  if (d == 0) throw unsupported_error("density: dimension 0 is not supported (the limit is a point mass)");
  const auto t = P.table(n);
  return DensityTable{n, P.prime(), d, t->lengths};
}

std::complex<double> gn_fourier_exact(const ProblemSpec& P, unsigned n, std::complex<double> y) {
  const std::complex<double> f = fn_eval(P, n, y);
  if (y == std::complex<double>(0, 0)) return f;
  const std::complex<double> z = y / P.table(n)->q().get_d();
  return f * one_minus_exp_neg_i(z) / (std::complex<double>(0, 1) * z);
}

std::complex<double> quadrature_fourier(const DensityTable& t, std::complex<double> y) {
  // integral over [a, a + w) of e^{-iyx} dx = w e^{-iy(a + w/2)} sinc(yw/2)
  const double w = 1.0 / t.q().get_d();
  const std::complex<double> i(0, 1);
  const std::complex<double> width_factor = w * sinc(y * w / 2.0);
  std::complex<double> s = 0;
  for (std::size_t j = 0; j < t.lengths.size(); ++j) {
    if (t.lengths[j] == 0) continue;
    const double mid = (static_cast<double>(j) + 0.5) * w;
    s += t.value(j).get_d() * std::exp(-i * y * mid);
  }
  return s * width_factor;
}

std::string density_csv(const DensityTable& t) {
  std::string out = "x,g_n_of_x,j,ell_j\n";
  for (std::size_t j = 0; j < t.lengths.size(); ++j) {
    if (t.lengths[j] == 0) continue;
    out += format_double(t.x(j).get_d()) + "," + format_double(t.value(j).get_d()) + "," + std::to_string(j) + "," +
           t.lengths[j].get_str() + "\n";
  }
  return out;
}

}  // namespace fpf
