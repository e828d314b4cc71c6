#pragma once

#include <memory>
#include <optional>

#include "fpf/graded_lengths.hpp"
#include "fpf/ideal.hpp"

namespace fpf {

/// The pair (R, I) together with the normalizing exponent d.  Copies share one
/// table cache, which is safe for concurrent readers and inserts each level once.
class ProblemSpec {
 public:
  ProblemSpec(RingPresentation ring, HomogeneousIdeal ideal, std::optional<unsigned> dim_override = std::nullopt);

  const RingPresentation& ring() const noexcept { return ring_; }
  const HomogeneousIdeal& ideal() const noexcept { return ideal_; }
  std::uint32_t prime() const noexcept { return ring_.prime(); }
  const std::optional<unsigned>& dim_override() const noexcept { return dim_override_; }

  /// dim_override if set, else the Krull dimension of R.
  unsigned dimension() const;
  /// Krull dimension of R from its Hilbert series.
  unsigned ring_dimension() const;

  std::shared_ptr<const GradedLengthTable> table(unsigned n) const;
  /// Computes levels 0..n_max in parallel; rethrows the first failure.
  void prefetch_tables(unsigned n_max) const;

 private:
  struct Cache;

  RingPresentation ring_;
  HomogeneousIdeal ideal_;
  std::optional<unsigned> dim_override_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace fpf
