#include <chrono>
#include <cstdio>
#include <functional>

#include "fpf/cli/commands.hpp"
#include "fpf/properties.hpp"

namespace fpf::cli {

int cmd_selftest(const CommandOptions& o, std::ostream& out, std::ostream&) {
  const auto suite = standard_suite();
  const auto grid = real_grid(-4.0, 4.0, 17);
  const std::vector<double> symmetric{0.25, 0.5, 1.0, 2.0, 3.0, 4.0};
  const unsigned monomial_count = o.quick ? 40 : 200;
  const unsigned groebner_count = o.quick ? 10 : 50;

  const std::vector<std::function<PropertyResult()>> checks{
      [&] { return check_staircase_vs_enumeration(monomial_count, o.seed); },
      [&] { return check_groebner_vs_macaulay(groebner_count, o.seed + 1); },
      [&] { return check_kernels_agree(monomial_count / 4, o.seed + 2); },
      [&] { return check_ab_identity(suite, 6); },
      [&] { return check_density_bridge(suite, 8, grid); },
      [&] { return check_conjugate_symmetry(suite, symmetric); },
      [&] { return check_cauchy_decay(suite, grid); },
  };

  bool all = true;
  for (const auto& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    const PropertyResult r = c();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f", secs);
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " (" << timing << " s)\n";
    all = all && r.passed;
  }
  return all ? exit_ok : exit_comparison;
}

}  // namespace fpf::cli
