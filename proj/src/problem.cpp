#include "fpf/problem.hpp"

#include <omp.h>

#include <exception>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "fpf/errors.hpp"
#include "fpf/hilbert_series.hpp"

namespace fpf {

struct ProblemSpec::Cache {
  std::shared_mutex mutex;
  std::map<unsigned, std::shared_ptr<const GradedLengthTable>> tables;
  std::once_flag dim_once;
  unsigned ring_dim = 0;
};

ProblemSpec::ProblemSpec(RingPresentation ring, HomogeneousIdeal ideal, std::optional<unsigned> dim_override)
    : ring_(std::move(ring)), ideal_(std::move(ideal)), dim_override_(dim_override), cache_(std::make_shared<Cache>()) {
  if (!ideal_.ring()->compatible(*ring_.ring())) throw structural_error("problem: ideal and ring use different rings");
}

unsigned ProblemSpec::ring_dimension() const {
  std::call_once(cache_->dim_once, [&] { cache_->ring_dim = hilbert_samuel(series_of_ring(ring_)).dimension; });
  return cache_->ring_dim;
}

unsigned ProblemSpec::dimension() const { return dim_override_ ? *dim_override_ : ring_dimension(); }

std::shared_ptr<const GradedLengthTable> ProblemSpec::table(unsigned n) const {
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->tables.find(n);
    if (it != cache_->tables.end()) return it->second;
  }
  auto fresh = std::make_shared<const GradedLengthTable>(graded_lengths(ring_, ideal_, n));
  std::unique_lock lock(cache_->mutex);
  return cache_->tables.emplace(n, std::move(fresh)).first->second;
}

void ProblemSpec::prefetch_tables(unsigned n_max) const {
  std::exception_ptr failure;
  const int count = static_cast<int>(n_max) + 1;
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = count - 1; n >= 0; --n) {
    try {
      table(static_cast<unsigned>(n));
    } catch (...) {
#pragma omp critical(fpf_prefetch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fpf
