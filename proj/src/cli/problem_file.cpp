#include "fpf/cli/problem_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fpf/errors.hpp"
#include "fpf/poly_parser.hpp"
#include "fpf/prime_field.hpp"
#include "fpf/properties.hpp"

namespace fpf::cli {

namespace {

using nlohmann::json;

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of `needle`, 0 if absent.
int line_of(std::string_view text, const std::string& needle) {
  const auto pos = text.find(needle);
  return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

int line_of_key(std::string_view text, const std::string& key) { return line_of(text, "\"" + key + "\""); }

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw parse_error("problem file: " + what, line_of_key(text_, key));
  }

  const json& require(const json& obj, const std::string& key) const {
    if (!obj.is_object() || !obj.contains(key)) fail(key, "missing required field '" + key + "'");
    return obj.at(key);
  }

  std::uint32_t positive_int(const json& v, const std::string& key) const {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 0x7fffffff)
      fail(key, "'" + key + "' must be a positive integer");
    return static_cast<std::uint32_t>(v.get<long long>());
  }

  unsigned nonnegative_int(const json& v, const std::string& key) const {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0xffff)
      fail(key, "'" + key + "' must be a nonnegative integer");
    return static_cast<unsigned>(v.get<long long>());
  }

  double number(const json& v, const std::string& key) const {
    if (!v.is_number()) fail(key, "'" + key + "' must be a number");
    return v.get<double>();
  }

  Rational rational(const json& v, const std::string& key) const {
    try {
      if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
      if (v.is_string()) {
        Rational r(v.get<std::string>());
        r.canonicalize();
        if (r.get_den() == 0) fail(key, "'" + key + "' has a zero denominator");
        return r;
      }
    } catch (const std::invalid_argument&) {
    }
    fail(key, "'" + key + "' must be an integer or a rational string like \"-1/2\"");
  }

  std::vector<std::string> strings(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "'" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& s : v) {
      if (!s.is_string()) fail(key, "'" + key + "' must be an array of strings");
      out.push_back(s.get<std::string>());
    }
    return out;
  }

  std::vector<std::uint32_t> degrees(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "'" + key + "' must be an array of positive integers");
    std::vector<std::uint32_t> out;
    for (const auto& d : v) out.push_back(positive_int(d, key));
    return out;
  }

 private:
  std::string_view text_;
};

std::vector<std::complex<double>> read_y_grid(const Reader& in, const json& g) {
  if (!g.is_object()) in.fail("y_grid", "'y_grid' must be an object");
  if (g.contains("points")) {
    const auto& pts = g.at("points");
    if (!pts.is_array()) in.fail("points", "'points' must be an array of [re, im] pairs or numbers");
    std::vector<std::complex<double>> out;
    for (const auto& p : pts) {
      if (p.is_number()) {
        out.emplace_back(p.get<double>(), 0.0);
      } else if (p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number()) {
        out.emplace_back(p[0].get<double>(), p[1].get<double>());
      } else {
        in.fail("points", "'points' must be an array of [re, im] pairs or numbers");
      }
    }
    return out;
  }
  const double lo = in.number(in.require(g, "re_min"), "re_min");
  const double hi = in.number(in.require(g, "re_max"), "re_max");
  const unsigned count = in.nonnegative_int(in.require(g, "count"), "count");
  return real_grid(lo, hi, count);
}

HNData read_hn(const Reader& in, const json& h) {
  HNData out;
  const auto& delta = in.require(h, "delta_R");
  const auto& rank = in.require(h, "rank_S");
  if (!delta.is_number_integer()) in.fail("delta_R", "'delta_R' must be an integer");
  if (!rank.is_number_integer()) in.fail("rank_S", "'rank_S' must be an integer");
  out.delta_r = static_cast<long>(delta.get<long long>());
  out.rank_s = static_cast<long>(rank.get<long long>());
  const auto& factors = in.require(h, "factors");
  if (!factors.is_array()) in.fail("factors", "'factors' must be an array");
  for (const auto& f : factors) {
    const auto& r = in.require(f, "r");
    if (!r.is_number_integer()) in.fail("r", "'r' must be an integer");
    out.factors.push_back({in.rational(in.require(f, "mu"), "mu"), static_cast<long>(r.get<long long>())});
  }
  return out;
}

}  // namespace

ProblemFile parse_problem_file(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("problem file is not valid JSON: ") + e.what(),
                      line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  const Reader in(text);
  if (!root.is_object()) throw parse_error("problem file: top level must be an object", 1);

  ProblemFile pf;
  pf.source = std::string(text);
  const auto& prime = in.require(root, "prime");
  pf.prime = in.positive_int(prime, "prime");
  if (!is_prime(pf.prime)) in.fail("prime", "'prime' must be a prime number (got " + std::to_string(pf.prime) + ")");

  const auto& vars = in.require(root, "variables");
  if (!vars.is_array() || vars.empty()) in.fail("variables", "'variables' must be a nonempty array");
  for (const auto& v : vars) {
    const auto& name = in.require(v, "name");
    if (!name.is_string() || name.get<std::string>().empty()) in.fail("name", "variable 'name' must be a nonempty string");
    const auto n = name.get<std::string>();
    if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_') ||
        !std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
      in.fail("name", "variable name '" + n + "' is not an identifier");
    for (const auto& [existing, w] : pf.variables)
      if (existing == n) in.fail("name", "variable '" + n + "' declared twice");
    pf.variables.emplace_back(n, in.positive_int(in.require(v, "degree"), "degree"));
  }
  if (root.contains("relations")) pf.relations = in.strings(root.at("relations"), "relations");
  pf.ideal = in.strings(in.require(root, "ideal"), "ideal");
  if (pf.ideal.empty()) in.fail("ideal", "'ideal' must list at least one generator");

  if (root.contains("options")) {
    const auto& opt = root.at("options");
    if (!opt.is_object()) in.fail("options", "'options' must be an object");
    if (opt.contains("n_max")) pf.n_max = in.nonnegative_int(opt.at("n_max"), "n_max");
    if (opt.contains("y_grid")) pf.y_grid = read_y_grid(in, opt.at("y_grid"));
    if (opt.contains("dim_override") && !opt.at("dim_override").is_null())
      pf.dim_override = in.nonnegative_int(opt.at("dim_override"), "dim_override");
    if (opt.contains("hsop_degrees")) pf.hsop_degrees = in.degrees(opt.at("hsop_degrees"), "hsop_degrees");
  }
  if (!root.contains("options") || !root.at("options").contains("y_grid")) pf.y_grid = real_grid(0.0, 4.0, 9);

  if (root.contains("closed_form")) {
    const auto& cf = root.at("closed_form");
    if (!cf.is_object()) in.fail("closed_form", "'closed_form' must be an object");
    if (cf.contains("e_R")) pf.closed_form.e_r = in.rational(cf.at("e_R"), "e_R");
    if (cf.contains("h")) pf.closed_form.h = in.positive_int(cf.at("h"), "h");
    if (cf.contains("hsop_degrees")) pf.closed_form.hsop_degrees = in.degrees(cf.at("hsop_degrees"), "hsop_degrees");
    if (cf.contains("hn")) pf.closed_form.hn = read_hn(in, cf.at("hn"));
  }
  return pf;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot open problem file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_problem_file(ss.str());
}

ProblemSpec ProblemFile::build() const {
  std::vector<std::uint32_t> weights;
  std::vector<std::string> names;
  for (const auto& [name, w] : variables) {
    names.push_back(name);
    weights.push_back(w);
  }
  const auto ring = make_poly_ring(prime, std::move(weights), std::move(names));
  auto parse_all = [&](const std::vector<std::string>& texts, const char* what) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) {
      try {
        out.push_back(parse_polynomial(t, ring));
      } catch (const parse_error& e) {
        throw parse_error(std::string(what) + " \"" + t + "\": " + e.what(), line_of(source, json(t).dump()));
      }
    }
    return out;
  };
  auto rels = parse_all(relations, "relation");
  auto gens = parse_all(ideal, "ideal generator");
  return ProblemSpec(RingPresentation(ring, std::move(rels)), HomogeneousIdeal(std::move(gens)), dim_override);
}

}  // namespace fpf::cli
