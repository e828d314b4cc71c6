#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpf/closed_forms.hpp"
#include "fpf/problem.hpp"

namespace fpf::cli {

struct ClosedFormParams {
  std::optional<Rational> e_r;
  std::optional<std::uint32_t> h;
  std::vector<std::uint32_t> hsop_degrees;
  std::optional<HNData> hn;
};

/// JSON problem description:
///   { "prime": 2,
///     "variables": [{"name": "X", "degree": 1}, ...],
///     "relations": ["Y^2 - X^3"],            (optional)
///     "ideal": ["X", "Y"],
///     "options": {"n_max": 10, "y_grid": {"re_min": 0, "re_max": 4, "count": 9} or {"points": [[re, im], ...]},
///                 "dim_override": 2, "hsop_degrees": [1, 1]},                    (all optional)
///     "closed_form": {"e_R": "1", "h": 2, "hsop_degrees": [...],
///                     "hn": {"delta_R": 1, "rank_S": 1, "factors": [{"mu": "-1", "r": 1}]}} }  (optional)
struct ProblemFile {
  std::uint32_t prime = 2;
  std::vector<std::pair<std::string, std::uint32_t>> variables;
  std::vector<std::string> relations;
  std::vector<std::string> ideal;
  unsigned n_max = 8;
  std::vector<std::complex<double>> y_grid;
  std::optional<unsigned> dim_override;
  std::vector<std::uint32_t> hsop_degrees;
  ClosedFormParams closed_form;

  /// Parses the polynomials; parse_error carries the line of the offending string.
  ProblemSpec build() const;

  /// Raw text, kept to map polynomial errors back to lines.
  std::string source;
};

/// Throws parse_error with a 1-based line number.
ProblemFile parse_problem_file(std::string_view text);
ProblemFile load_problem_file(const std::string& path);

}  // namespace fpf::cli
