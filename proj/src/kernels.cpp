#include "fpf/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "fpf/errors.hpp"

namespace fpf::kernels {

namespace {

void check_generators(std::span<const ExponentVector> gens, const Grading& g) {
  if (gens.size() > max_inclusion_exclusion_generators)
    throw structural_error("inclusion_exclusion: too many generators (" + std::to_string(gens.size()) + ")");
  for (const auto& m : gens)
    if (m.size() != g.var_count()) throw structural_error("inclusion_exclusion: generator length mismatch");
}

std::size_t lcm_degree_bound(std::span<const ExponentVector> gens, const Grading& g) {
  ExponentVector top(g.var_count(), 0);
  for (const auto& m : gens) top = monomial_lcm(top, m);
  return static_cast<std::size_t>(weighted_degree(top, g));
}

std::size_t box_volume(const ExponentVector& box) {
  std::size_t v = 1;
  for (auto b : box) {
    if (b == 0) return 0;
    if (__builtin_mul_overflow(v, static_cast<std::size_t>(b), &v))
      throw std::overflow_error("enumerate_staircase: bounding box too large");
  }
  return v;
}

bool standard(const std::vector<std::uint32_t>& e, std::span<const ExponentVector> gens) {
  for (const auto& m : gens) {
    bool div = true;
    for (std::size_t i = 0; i < e.size() && div; ++i) div = m[i] <= e[i];
    if (div) return false;
  }
  return true;
}

void trim_zeros(std::vector<std::int64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

std::vector<std::int64_t> inclusion_exclusion_numerator(std::span<const ExponentVector> gens, const Grading& g) {
  check_generators(gens, g);
  const std::size_t r = gens.size();
  const std::size_t nvars = g.var_count();
  // high generators pick a chunk; low subsets inside a chunk reuse a memoized lcm table
  const std::size_t high_bits = std::min<std::size_t>(r, 6);
  const std::size_t low_bits = r - high_bits;
  const std::int64_t chunks = std::int64_t{1} << high_bits;
  const std::size_t low_subsets = std::size_t{1} << low_bits;
  std::vector<std::int64_t> total(lcm_degree_bound(gens, g) + 1, 0);
  const auto weights = g.weights();

#pragma omp parallel
  {
    std::vector<std::int64_t> local(total.size(), 0);
    std::vector<std::uint32_t> memo(low_subsets * nvars);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t h = 0; h < chunks; ++h) {
      std::uint32_t* base = memo.data();
      std::fill(base, base + nvars, 0u);
      for (std::size_t k = 0; k < high_bits; ++k)
        if ((static_cast<std::uint64_t>(h) >> k) & 1)
          for (std::size_t i = 0; i < nvars; ++i) base[i] = std::max(base[i], gens[low_bits + k][i]);
      const int high_parity = __builtin_popcountll(static_cast<std::uint64_t>(h)) & 1;
      for (std::size_t s = 0; s < low_subsets; ++s) {
        std::uint32_t* cur = &memo[s * nvars];
        if (s != 0) {
          const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
          const std::uint32_t* prev = &memo[(s & (s - 1)) * nvars];
          for (std::size_t i = 0; i < nvars; ++i) cur[i] = std::max(prev[i], gens[low][i]);
        }
        std::size_t deg = 0;
        for (std::size_t i = 0; i < nvars; ++i) deg += static_cast<std::size_t>(cur[i]) * weights[i];
        local[deg] += ((__builtin_popcountll(s) & 1) ^ high_parity) ? -1 : 1;
      }
    }
#pragma omp critical
    for (std::size_t d = 0; d < total.size(); ++d) total[d] += local[d];
  }
  trim_zeros(total);
  return total;
}

std::vector<std::int64_t> enumerate_staircase(std::span<const ExponentVector> gens, const Grading& g,
                                              const ExponentVector& box) {
  if (box.size() != g.var_count()) throw structural_error("enumerate_staircase: box length mismatch");
  const std::size_t volume = box_volume(box);
  std::size_t max_deg = 0;
  for (std::size_t i = 0; i < box.size(); ++i)
    if (box[i] > 0) max_deg += static_cast<std::size_t>(box[i] - 1) * g.weight(i);
  std::vector<std::int64_t> total(max_deg + 1, 0);
  const std::size_t nvars = box.size();
  const auto weights = g.weights();

#pragma omp parallel
  {
    std::vector<std::int64_t> local(total.size(), 0);
    std::vector<std::uint32_t> e(nvars);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(volume); ++idx) {
      std::size_t rest = static_cast<std::size_t>(idx);
      std::size_t deg = 0;
      for (std::size_t i = 0; i < nvars; ++i) {
        e[i] = static_cast<std::uint32_t>(rest % box[i]);
        rest /= box[i];
        deg += static_cast<std::size_t>(e[i]) * weights[i];
      }
      if (standard(e, gens)) ++local[deg];
    }
#pragma omp critical
    for (std::size_t d = 0; d < total.size(); ++d) total[d] += local[d];
  }
  trim_zeros(total);
  return total;
}

std::vector<std::complex<double>> exponential_sum(std::span<const double> coeffs, double step,
                                                  std::span<const std::complex<double>> ys) {
  std::vector<std::complex<double>> out(ys.size());
  const std::complex<double> minus_i(0.0, -1.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(ys.size()); ++k) {
    const std::complex<double> y = ys[static_cast<std::size_t>(k)];
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0.0) continue;
      acc += coeffs[j] * std::exp(minus_i * y * (static_cast<double>(j) * step));
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

namespace serial {

std::vector<std::int64_t> inclusion_exclusion_numerator(std::span<const ExponentVector> gens, const Grading& g) {
  check_generators(gens, g);
  const std::size_t r = gens.size();
  const std::size_t nvars = g.var_count();
  const std::size_t subsets = std::size_t{1} << r;
  std::vector<std::int64_t> total(lcm_degree_bound(gens, g) + 1, 0);
  std::vector<std::uint32_t> memo(subsets * nvars, 0);
  total[0] += 1;  // empty subset
  for (std::size_t s = 1; s < subsets; ++s) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    const std::size_t prev = s & (s - 1);
    std::uint32_t* cur = &memo[s * nvars];
    const std::uint32_t* base = &memo[prev * nvars];
    for (std::size_t i = 0; i < nvars; ++i) cur[i] = std::max(base[i], gens[low][i]);
    std::size_t deg = 0;
    for (std::size_t i = 0; i < nvars; ++i) deg += static_cast<std::size_t>(cur[i]) * g.weight(i);
    total[deg] += (__builtin_popcountll(s) & 1) ? -1 : 1;
  }
  trim_zeros(total);
  return total;
}

std::vector<std::int64_t> enumerate_staircase(std::span<const ExponentVector> gens, const Grading& g,
                                              const ExponentVector& box) {
  if (box.size() != g.var_count()) throw structural_error("enumerate_staircase: box length mismatch");
  if (box_volume(box) == 0) return {};
  std::size_t max_deg = 0;
  for (std::size_t i = 0; i < box.size(); ++i) max_deg += static_cast<std::size_t>(box[i] - 1) * g.weight(i);
  std::vector<std::int64_t> total(max_deg + 1, 0);
  std::vector<std::uint32_t> e(box.size(), 0);
  for (;;) {
    if (standard(e, gens)) ++total[static_cast<std::size_t>(weighted_degree(e, g))];
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == box[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  trim_zeros(total);
  return total;
}

std::vector<std::complex<double>> exponential_sum(std::span<const double> coeffs, double step,
                                                  std::span<const std::complex<double>> ys) {
  std::vector<std::complex<double>> out;
  out.reserve(ys.size());
  const std::complex<double> minus_i(0.0, -1.0);
  for (const auto y : ys) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0.0) continue;
      acc += coeffs[j] * std::exp(minus_i * y * (static_cast<double>(j) * step));
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace serial

}  // namespace fpf::kernels
