#include "fpf/macaulay.hpp"

#include <algorithm>
#include <map>

#include "fpf/errors.hpp"

namespace fpf {

namespace {

void collect(const Grading& g, std::size_t var, std::int64_t remaining, ExponentVector& cur,
             std::vector<ExponentVector>& out) {
  if (var + 1 == g.var_count()) {
    const std::int64_t w = g.weight(var);
    if (remaining % w == 0) {
      cur[var] = static_cast<std::uint32_t>(remaining / w);
      out.push_back(cur);
    }
    cur[var] = 0;
    return;
  }
  const std::int64_t w = g.weight(var);
  for (std::int64_t e = 0; e * w <= remaining; ++e) {
    cur[var] = static_cast<std::uint32_t>(e);
    collect(g, var + 1, remaining - e * w, cur, out);
  }
  cur[var] = 0;
}

// Rank over F_p of dense rows (destroys the input).
std::size_t rank_mod_p(std::vector<std::vector<residue>>& rows, std::size_t cols, const PrimeField& f) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const residue inv = f.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = f.mul(v, inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const residue factor = rows[r][c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(const Grading& g, std::int64_t j) {
  std::vector<ExponentVector> out;
  if (j < 0) return out;
  ExponentVector cur(g.var_count(), 0);
  collect(g, 0, j, cur, out);
  const TermOrder order(g);
  std::sort(out.begin(), out.end(), [&](const ExponentVector& a, const ExponentVector& b) { return order.less(b, a); });
  return out;
}

std::size_t macaulay_rank_oracle(const RingPresentation& R, std::span<const Polynomial> gens, std::int64_t j) {
  const auto& grading = R.grading();
  const auto basis = monomials_of_degree(grading, j);
  if (basis.empty()) return 0;
  std::map<ExponentVector, std::size_t> column;
  for (std::size_t k = 0; k < basis.size(); ++k) column.emplace(basis[k], k);

  std::vector<Polynomial> all = R.relations();
  all.insert(all.end(), gens.begin(), gens.end());
  std::vector<std::vector<residue>> rows;
  for (const auto& f : all) {
    if (!f.ring()->compatible(*R.ring())) throw structural_error("macaulay_rank_oracle: generator over a different ring");
    if (f.is_zero()) continue;
    const auto deg = f.homogeneous_degree();
    if (!deg) throw structural_error("macaulay_rank_oracle: generator " + f.to_string() + " is not homogeneous");
    for (const auto& m : monomials_of_degree(grading, j - *deg)) {
      std::vector<residue> row(basis.size(), 0);
      for (const auto& t : f.terms()) row[column.at(monomial_mul(m, t.exponents))] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  return basis.size() - rank_mod_p(rows, basis.size(), R.ring()->field);
}

}  // namespace fpf
