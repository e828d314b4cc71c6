#include "fpf/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpf/cli/format.hpp"
#include "fpf/cli/y_grid.hpp"
#include "fpf/closed_forms.hpp"
#include "fpf/density.hpp"
#include "fpf/errors.hpp"
#include "fpf/fp_core.hpp"
#include "fpf/hilbert_series.hpp"

namespace fpf::cli {

namespace {

using nlohmann::json;
using cplx = std::complex<double>;

constexpr double compare_slack = 1e-6;

void emit(const CommandOptions& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + o.out + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool want_json(const CommandOptions& o, bool json_default = false) {
  const std::string f = o.format.value_or(json_default ? "json" : "csv");
  if (f != "csv" && f != "json") throw parse_error("--format must be csv or json");
  return f == "json";
}

std::vector<cplx> grid_of(const ProblemFile& pf, const CommandOptions& o) {
  return o.y_grid ? parse_y_grid(*o.y_grid) : pf.y_grid;
}

unsigned limit_level(const ProblemFile& pf, const CommandOptions& o) {
  const unsigned n = o.n_max.value_or(o.n.value_or(pf.n_max));
  if (n < 2) throw parse_error("the limit protocol needs --n-max of at least 2");
  return n;
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Rational ring_multiplicity(const ProblemFile& pf, const ProblemSpec& P) {
  if (pf.closed_form.e_r) return *pf.closed_form.e_r;
  return hilbert_samuel(series_of_ring(P.ring())).multiplicity;
}

std::vector<std::uint32_t> first_nonempty(std::initializer_list<const std::vector<std::uint32_t>*> options) {
  for (const auto* v : options)
    if (!v->empty()) return *v;
  return {};
}

// Degrees of S = k[hsop]: flags, then closed_form, then options, then the variables of a free ring.
std::vector<std::uint32_t> ring_hsop_degrees(const ProblemFile& pf, const CommandOptions& o) {
  auto d = first_nonempty({&o.hsop_degrees, &pf.closed_form.hsop_degrees, &pf.hsop_degrees});
  if (!d.empty()) return d;
  if (pf.relations.empty()) {
    for (const auto& v : pf.variables) d.push_back(v.second);
    return d;
  }
  throw parse_error("hsop degrees are required for rings with relations (--hsop-degrees or options.hsop_degrees)");
}

std::vector<std::uint32_t> ideal_degrees(const ProblemSpec& P) {
  std::vector<std::uint32_t> d;
  for (const auto& g : P.ideal().generators()) d.push_back(static_cast<std::uint32_t>(*g.homogeneous_degree()));
  return d;
}

struct BuiltModel {
  ExponentialPolynomialModel model;
  json details;
};

BuiltModel build_model(const ProblemFile& pf, const ProblemSpec& P, const CommandOptions& o) {
  const std::string& m = o.method;
  if (m == "hsop") {
    auto degrees = first_nonempty({&o.hsop_degrees, &pf.closed_form.hsop_degrees});
    if (degrees.empty()) {
      degrees = ideal_degrees(P);
      if (degrees.size() != P.dimension())
        throw parse_error("method hsop: the ideal is not generated by dim R elements; pass --hsop-degrees");
    }
    const Rational e = ring_multiplicity(pf, P);
    json d{{"e_R", e.get_str()}, {"hsop_degrees", degrees}};
    return {model_hsop(e, degrees), d};
  }
  if (m == "dim1") {
    std::optional<std::uint32_t> h = o.h ? o.h : pf.closed_form.h;
    if (!h) {
      const auto degrees = ideal_degrees(P);
      if (degrees.size() != 1) throw parse_error("method dim1: pass --h (the ideal is not principal)");
      h = degrees.front();
    }
    const Rational e = ring_multiplicity(pf, P);
    json d{{"e_R", e.get_str()}, {"h", *h}};
    return {model_dim_one(e, *h), d};
  }
  if (m == "finite-pd") {
    const auto degrees = ring_hsop_degrees(pf, o);
    const auto b = betti_alternating_polynomial(P, degrees, 0);
    BigInt prod = 1;
    for (auto d : degrees) prod *= d;
    Rational e(BigInt(1), prod);
    e.canonicalize();
    json d{{"e_S", e.get_str()}, {"hsop_degrees", degrees}, {"B", b.to_string()}};
    return {model_finite_pd(e, b, static_cast<unsigned>(degrees.size())), d};
  }
  if (m == "hn") {
    if (!pf.closed_form.hn) throw parse_error("method hn: the problem file has no closed_form.hn section");
    const auto& h = *pf.closed_form.hn;
    json factors = json::array();
    for (const auto& f : h.factors) factors.push_back({{"mu", f.mu.get_str()}, {"r", f.rank}});
    json d{{"delta_R", h.delta_r}, {"rank_S", h.rank_s}, {"factors", factors}};
    return {model_from_hn(h), d};
  }
  throw parse_error("--method must be one of hsop, dim1, finite-pd, hn");
}

}  // namespace

int cmd_hk(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream&) {
  const bool as_json = want_json(o);
  const ProblemSpec P = pf.build();
  const unsigned top = o.n.value_or(o.n_max.value_or(pf.n_max));
  P.prefetch_tables(top);
  std::vector<Rational> values;
  for (unsigned n = 0; n <= top; ++n) values.push_back(hk_multiplicity(P, n));
  unsigned stable_from = top;
  while (stable_from > 0 && values[stable_from - 1] == values[top]) --stable_from;

  if (as_json) {
    json levels = json::array();
    for (unsigned n = 0; n <= top; ++n)
      levels.push_back({{"n", n}, {"length", P.table(n)->total().get_str()}, {"hk", values[n].get_str()}});
    emit(o, out, dump({{"levels", levels}, {"value", values[top].get_str()}, {"stable_from", stable_from}}));
    return exit_ok;
  }
  std::string text = csv_row({"n", "length", "hk", "stable"});
  for (unsigned n = 0; n <= top; ++n)
    text += csv_row({std::to_string(n), P.table(n)->total().get_str(), values[n].get_str(), n >= stable_from ? "1" : "0"});
  emit(o, out, text);
  return exit_ok;
}

int cmd_eval(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream&) {
  const bool as_json = want_json(o);
  const ProblemSpec P = pf.build();
  const unsigned n = limit_level(pf, o);
  const auto ys = grid_of(pf, o);
  const auto report = fp_limit(P, ys, n);
  if (as_json) {
    json rows = json::array();
    for (std::size_t k = 0; k < ys.size(); ++k) {
      const auto& e = report.estimates[k];
      rows.push_back({{"y", complex_json(ys[k])}, {"n", n}, {"F", complex_json(e.value)}, {"err_bound", e.error_bound},
                      {"cauchy_constant", e.cauchy_constant}, {"decay_ratio", e.decay_ratio}});
    }
    emit(o, out, dump({{"rows", rows}, {"sup_differences", report.sup_differences}}));
    return exit_ok;
  }
  std::string text = csv_row({"y_re", "y_im", "n", "F_re", "F_im", "err_bound"});
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const auto& e = report.estimates[k];
    text += csv_row({format_re(ys[k]), format_im(ys[k]), std::to_string(n), format_re(e.value), format_im(e.value),
                     format_double(e.error_bound)});
  }
  emit(o, out, text);
  return exit_ok;
}

int cmd_closed(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream&) {
  const bool as_json = want_json(o, true);
  const ProblemSpec P = pf.build();
  const auto built = build_model(pf, P, o);
  const auto ys = grid_of(pf, o);
  if (as_json) {
    json samples = json::array();
    for (const auto& y : ys) samples.push_back({{"y", complex_json(y)}, {"value", complex_json(eval_model(built.model, y))}});
    emit(o, out,
         dump({{"method", o.method},
               {"parameters", built.details},
               {"model", model_to_json(built.model)},
               {"value_at_zero", complex_json(eval_model(built.model, 0.0))},
               {"samples", samples}}));
    return exit_ok;
  }
  std::string text = csv_row({"y_re", "y_im", "model_re", "model_im"});
  for (const auto& y : ys) {
    const cplx v = eval_model(built.model, y);
    text += csv_row({format_re(y), format_im(y), format_re(v), format_im(v)});
  }
  emit(o, out, text);
  return exit_ok;
}

int cmd_compare(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream& err) {
  const bool as_json = want_json(o);
  const ProblemSpec P = pf.build();
  const auto built = build_model(pf, P, o);
  const unsigned n = limit_level(pf, o);
  const auto ys = grid_of(pf, o);
  const auto report = fp_limit(P, ys, n);

  bool passed = true;
  double max_dev = 0, max_bound = 0;
  std::string text = csv_row({"y_re", "y_im", "F_re", "F_im", "model_re", "model_im", "deviation", "bound", "ok"});
  json rows = json::array();
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const auto& e = report.estimates[k];
    const cplx mv = eval_model(built.model, ys[k]);
    const double dev = std::abs(e.value - mv);
    const double bound = e.error_bound + compare_slack;
    const bool ok = dev <= bound;
    passed = passed && ok;
    max_dev = std::max(max_dev, dev);
    max_bound = std::max(max_bound, bound);
    text += csv_row({format_re(ys[k]), format_im(ys[k]), format_re(e.value), format_im(e.value), format_re(mv),
                     format_im(mv), format_double(dev), format_double(bound), ok ? "1" : "0"});
    rows.push_back({{"y", complex_json(ys[k])}, {"F", complex_json(e.value)}, {"model", complex_json(mv)},
                    {"deviation", dev}, {"bound", bound}, {"ok", ok}});
  }
  if (as_json) {
    emit(o, out,
         dump({{"method", o.method}, {"n_max", n}, {"rows", rows}, {"max_deviation", max_dev}, {"passed", passed}}));
  } else {
    emit(o, out, text);
  }
  err << "compare " << o.method << ": max deviation " << format_double(max_dev) << ", largest bound "
      << format_double(max_bound) << ", " << (passed ? "PASS" : "FAIL") << "\n";
  return passed ? exit_ok : exit_comparison;
}

int cmd_density(const ProblemFile& pf, const CommandOptions& o, std::ostream& out, std::ostream& err) {
  const bool as_json = want_json(o);
  const ProblemSpec P = pf.build();
  const unsigned n = o.n.value_or(o.n_max.value_or(pf.n_max));
  const DensityTable t = density_table(P, n);
  const auto ys = grid_of(pf, o);

  const Rational f0 = hk_multiplicity(P, n);
  const bool zero_ok = t.mass() == f0;
  double max_dev = 0;
  for (const auto& y : ys) max_dev = std::max(max_dev, std::abs(gn_fourier_exact(P, n, y) - quadrature_fourier(t, y)));
  const bool passed = zero_ok && max_dev <= 1e-10;

  if (as_json) {
    json rows = json::array();
    for (std::size_t j = 0; j < t.lengths.size(); ++j)
      if (t.lengths[j] != 0)
        rows.push_back({{"x", t.x(j).get_d()}, {"g_n_of_x", t.value(j).get_d()}, {"j", j}, {"ell_j", t.lengths[j].get_str()}});
    emit(o, out,
         dump({{"n", n},
               {"table", rows},
               {"check", {{"ghat_0", t.mass().get_str()}, {"F_n_0", f0.get_str()}, {"max_fourier_deviation", max_dev}, {"passed", passed}}}}));
  } else {
    emit(o, out, density_csv(t));
  }
  err << "density n=" << n << ": ghat_n(0) = " << t.mass().get_str() << ", F_n(0) = " << f0.get_str()
      << (zero_ok ? " (equal)" : " (DIFFERENT)") << "; max |ghat_n - quadrature| = " << format_double(max_dev) << "\n";
  return passed ? exit_ok : exit_comparison;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius-Poincare functions of graded rings over prime fields", "fpf"};
  app.require_subcommand(1);
  CommandOptions o;

  auto add_file = [&](CLI::App* sub) { sub->add_option("--file", o.file, "problem file (JSON)")->required(); };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write the main output to this file");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--y-grid", o.y_grid, "min:max:count or comma-separated complex points (e.g. 1,0.5+2i)");
  };
  auto add_model = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--method", o.method, "closed form: hsop, dim1, finite-pd, hn")
                    ->check(CLI::IsMember({"hsop", "dim1", "finite-pd", "hn"}));
    if (required) opt->required();
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--h", o.h, "degree h for method dim1");
    sub->add_option("--hsop-degrees", o.hsop_degrees, "degrees of a homogeneous system of parameters")->delimiter(',');
  };

  auto* hk = app.add_subcommand("hk", "Hilbert-Kunz multiplicities for levels 0..n");
  add_file(hk);
  hk->add_option("--n", o.n, "largest level");
  add_output(hk);

  auto* eval = app.add_subcommand("eval", "F_n on a y grid with the limit error bound");
  add_file(eval);
  eval->add_option("--n", o.n, "level (alias of --n-max)");
  eval->add_option("--n-max", o.n_max, "level of the limit estimate (>= 2)");
  add_grid(eval);
  add_output(eval);

  auto* closed = app.add_subcommand("closed", "build and sample a closed-form model");
  add_file(closed);
  add_model(closed, true);
  add_grid(closed);
  add_output(closed);

  auto* compare = app.add_subcommand("compare", "compare F_{n_max} with a closed-form model");
  add_file(compare);
  add_model(compare, true);
  compare->add_option("--n-max", o.n_max, "level of the limit estimate (>= 2)");
  add_grid(compare);
  add_output(compare);

  auto* density = app.add_subcommand("density", "Hilbert-Kunz density table g_n and the Fourier check");
  add_file(density);
  density->add_option("--n", o.n, "level");
  add_grid(density);
  add_output(density);

  auto* selftest = app.add_subcommand("selftest", "run the property suites");
  selftest->add_option("--seed", o.seed, "seed for the random suites");
  selftest->add_flag("--quick", o.quick, "smaller random suites");

  std::vector<std::string> argv_storage{"fpf"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (*selftest) return cmd_selftest(o, out, err);
    const ProblemFile pf = load_problem_file(o.file);
    if (*hk) return cmd_hk(pf, o, out, err);
    if (*eval) return cmd_eval(pf, o, out, err);
    if (*closed) return cmd_closed(pf, o, out, err);
    if (*compare) return cmd_compare(pf, o, out, err);
    if (*density) return cmd_density(pf, o, out, err);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const structural_error& e) {
    err << "input error: " << e.what() << "\n";
    return exit_parse;
  } catch (const colength_error& e) {
    err << "colength error: " << e.what() << "\n";
    return exit_invariant;
  } catch (const invariant_error& e) {
    err << "invariant error: " << e.what() << "\n";
    return exit_invariant;
  } catch (const unsupported_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return exit_invariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_failure;
}

}  // namespace fpf::cli
