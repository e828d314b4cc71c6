#include "fpf/poly_parser.hpp"

#include <cctype>
#include <string>

#include "fpf/errors.hpp"

namespace fpf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negate));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      ++pos_;
      terms.push_back(parse_term(op == '-'));
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negate) {
    const auto& field = ring_->field;
    ExponentVector exps(ring_->var_count(), 0);
    residue coeff = 1;
    skip_ws();
    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = field.reduce(0);
      // reduce digit by digit so arbitrarily long literals stay exact
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = field.add(field.mul(coeff, field.reduce(10)), field.reduce(peek() - '0'));
        ++pos_;
      }
      skip_ws();
      if (at_end() || peek() != '*') return {exps, negate ? field.neg(coeff) : coeff};
      ++pos_;
    }
    parse_factor(exps);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      parse_factor(exps);
    }
    return {exps, negate ? field.neg(coeff) : coeff};
  }

  void parse_factor(ExponentVector& exps) {
    skip_ws();
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected a variable name");
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    std::size_t var = ring_->names.size();
    for (std::size_t i = 0; i < ring_->names.size(); ++i)
      if (ring_->names[i] == name) var = i;
    if (var == ring_->names.size()) fail("unknown variable '" + name + "'", start);
    std::uint64_t power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent after '^'");
      power = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        power = power * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (power > 0xFFFFFFFFull) fail("exponent too large");
        ++pos_;
      }
    }
    const std::uint64_t total = exps[var] + power;
    if (total > 0xFFFFFFFFull) fail("exponent too large");
    exps[var] = static_cast<std::uint32_t>(total);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw parse_error("polynomial \"" + std::string(text_) + "\": " + msg + " at column " + std::to_string(at + 1));
  }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace fpf
