#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fpf/cli/problem_file.hpp"

namespace fpf::cli {

enum exit_code : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_parse = 2,
  exit_invariant = 3,
  exit_comparison = 4,
};

struct CommandOptions {
  std::string file;
  std::optional<unsigned> n;
  std::optional<unsigned> n_max;
  std::string method;
  std::optional<std::string> y_grid;
  std::string out;
  std::optional<std::string> format;
  std::optional<std::uint32_t> h;
  std::vector<std::uint32_t> hsop_degrees;
  std::uint64_t seed = 20240601;
  bool quick = false;
};

int cmd_hk(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_eval(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_closed(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_compare(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_density(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_selftest(const CommandOptions& o, std::ostream& out, std::ostream& err);

/// Full command line front end: parses arguments, dispatches, and maps errors to
/// exit codes (2 parse, 3 colength/invariant, 4 comparison failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpf::cli
