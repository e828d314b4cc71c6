#pragma once

#include <string_view>

#include "fpf/polynomial.hpp"

namespace fpf {

/// Parses `c`, `c*mono`, `mono` terms joined by `+`/`-`, where `mono` is a `*`-product
/// of `V` or `V^k` over the ring's declared variable names.  Integer coefficients are
/// reduced mod p; whitespace is ignored.  Throws parse_error with the column on failure.
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring);

}  // namespace fpf
