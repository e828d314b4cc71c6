#include "fpf/graded_lengths.hpp"

#include "fpf/errors.hpp"
#include "fpf/staircase.hpp"

namespace fpf {

BigInt GradedLengthTable::length(long j) const {
  if (j < 0 || j > max_degree()) return 0;
  return lengths[static_cast<std::size_t>(j)];
}

BigInt GradedLengthTable::total() const {
  BigInt s = 0;
  for (const auto& l : lengths) s += l;
  return s;
}

BigInt GradedLengthTable::moment(unsigned m) const {
  BigInt s = 0;
  BigInt power;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    if (lengths[j] == 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), j, m);
    s += power * lengths[j];
  }
  return s;
}

BigInt GradedLengthTable::q() const {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, n);
  return r;
}

namespace {

void require_same_ring(const RingPresentation& R, const HomogeneousIdeal& I) {
  if (!I.ring()->compatible(*R.ring())) throw structural_error("graded_lengths: ideal and ring presentation differ");
}

MonomialIdeal zero_dimensional_initial(const RingPresentation& R, const HomogeneousIdeal& I, unsigned n) {
  const MonomialIdeal in = initial_ideal(frobenius_basis(R, I, n));
  for (std::size_t v = 0; v < in.var_count(); ++v)
    if (!in.pure_power(v)) {
      const auto& name = R.ring()->names[v];
      throw colength_error("ideal does not have finite colength: no power of " + name + " lies in the initial ideal", name);
    }
  return in;
}

}  // namespace

GroebnerBasis frobenius_basis(const RingPresentation& R, const HomogeneousIdeal& I, unsigned n) {
  require_same_ring(R, I);
  std::vector<Polynomial> gens = R.relations();
  const HomogeneousIdeal bracket = bracket_power(I, n);
  gens.insert(gens.end(), bracket.generators().begin(), bracket.generators().end());
  return buchberger(gens);
}

std::int64_t support_constant(const RingPresentation& R, const HomogeneousIdeal& I) {
  const MonomialIdeal in = zero_dimensional_initial(R, I, 0);
  std::uint32_t a = 0;
  for (std::size_t v = 0; v < in.var_count(); ++v) a = std::max(a, *in.pure_power(v));
  return (static_cast<std::int64_t>(a) + 1) * R.grading().weight_sum();
}

GradedLengthTable graded_lengths(const RingPresentation& R, const HomogeneousIdeal& I, unsigned n) {
  const MonomialIdeal in = zero_dimensional_initial(R, I, n);
  GradedLengthTable t{n, R.prime(), staircase_counts(in, R.grading())};
  const BigInt bound = t.q() * BigInt(static_cast<long>(support_constant(R, I)));
  if (t.max_degree() >= 0 && BigInt(t.max_degree()) >= bound)
    throw invariant_error("graded_lengths: table degree " + std::to_string(t.max_degree()) +
                          " exceeds the support bound " + bound.get_str());
  return t;
}

}  // namespace fpf
