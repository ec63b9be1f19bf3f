#include "picardlab/poly_parser.hpp"

#include <cctype>
#include <string>

#include "picardlab/errors.hpp"

namespace picardlab {

namespace {

enum class VarSet { None, Local, Homogeneous };

struct Term {
  Rational coeff = 1;
  std::array<unsigned, 3> hom{};
  std::array<unsigned, 2> local{};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPolynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(t);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    if (vars_ == VarSet::Homogeneous) {
      HomPoly p;
      for (const auto& t : terms) p.add_term(t.hom, t.coeff);
      if (!p.is_homogeneous()) throw ParseError(0, "X0/X1/X2 polynomial is not homogeneous");
      return p;
    }
    LocalPoly p;
    for (const auto& t : terms) p.add_term(t.local, t.coeff);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6) throw ParseError(at, "exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  void use(VarSet set, std::size_t at) {
    if (vars_ != VarSet::None && vars_ != set) throw ParseError(at, "mixed local (x, y) and homogeneous (X0, X1, X2) variables");
    vars_ = set;
  }

  Term parse_term() {
    Term t;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) throw ParseError(pos_, "expected a coefficient or a variable");
      const std::size_t at = pos_;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        if (!first) throw ParseError(at, "coefficient must come first in a term");
        std::string num = digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          const std::size_t den_at = pos_;
          const std::string den = digits();
          if (Integer(den) == 0) throw ParseError(den_at, "zero denominator");
          num += "/" + den;
        }
        t.coeff *= parse_rational(num);
      } else if (ch == 'x' || ch == 'y') {
        use(VarSet::Local, at);
        ++pos_;
        t.local[ch == 'x' ? 0 : 1] += exponent();
      } else if (ch == 'X') {
        ++pos_;
        if (at_end() || peek() < '0' || peek() > '2') throw ParseError(pos_, "expected X0, X1 or X2");
        use(VarSet::Homogeneous, at);
        const auto index = static_cast<std::size_t>(peek() - '0');
        ++pos_;
        t.hom[index] += exponent();
      } else {
        throw ParseError(at, std::string("unexpected character '") + ch + "'");
      }
      first = false;
      skip_ws();
      if (at_end() || peek() != '*') return t;
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  VarSet vars_ = VarSet::None;
};

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

LocalPoly parse_local(std::string_view text) {
  auto parsed = parse_polynomial(text);
  if (auto* p = std::get_if<LocalPoly>(&parsed)) return *p;
  throw ParseError(0, "expected a local polynomial in x and y");
}

HomPoly parse_homogeneous(std::string_view text) {
  auto parsed = parse_polynomial(text);
  if (auto* p = std::get_if<HomPoly>(&parsed)) return *p;
  // Constants are homogeneous of degree zero.
  const auto& local = std::get<LocalPoly>(parsed);
  if (local.total_degree() <= 0) return HomPoly::constant(local.coefficient({0, 0}));
  throw ParseError(0, "expected a homogeneous polynomial in X0, X1, X2");
}

}  // namespace picardlab
