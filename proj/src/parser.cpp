#include <cctype>

#include "lpa/element.hpp"
#include "lpa/errors.hpp"

namespace lpa {
namespace {

bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }
bool digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

class ExpressionParser {
 public:
  ExpressionParser(const AlgebraPtr& algebra, const std::string& text) : algebra_(algebra), text_(text) {}

  Element parse() {
    Element x = element();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Element element() {
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    if (peek() == '\0') fail("expected a term");
    Element x = term();
    if (negate) x = -x;
    while (peek() == '+' || peek() == '-') {
      const bool minus = text_[pos_++] == '-';
      Element t = term();
      if (minus) x -= t; else x += t;
    }
    return x;
  }

  Element term() {
    if (digit(peek())) {
      const std::size_t start = pos_;
      Scalar k = rational();
      const char next = peek();
      if (ident_start(next) || next == '(') return product().scaled(k);
      // A lone "1" followed by '.' is the identity atom inside a product.
      if (next == '.') {
        pos_ = start;
        return product();
      }
      return Element::scalar(algebra_, k);
    }
    return product();
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Scalar rational() {
    const std::string num = digits();
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      const std::string den = digits();
      if (mpz_class(den) == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      return algebra_->field().from_fraction(mpz_class(num), mpz_class(den));
    }
    return algebra_->field().from_fraction(mpz_class(num), mpz_class(1));
  }

  Element product() {
    Element x = atom();
    while (peek() == '.') {
      ++pos_;
      x = x * atom();
    }
    return x;
  }

  Element atom() {
    const char ch = peek();
    Element x(algebra_);
    if (ident_start(ch)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      const Graph& g = algebra_->graph();
      if (auto v = g.find_vertex(name)) {
        x = Element::vertex(algebra_, *v);
      } else if (auto e = g.find_edge(name)) {
        x = Element::edge(algebra_, *e);
      } else {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
    } else if (ch == '(') {
      ++pos_;
      x = element();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (ch == '1') {
      const std::size_t start = pos_;
      if (digits() != "1") {
        pos_ = start;
        fail("only the literal 1 may appear as a factor");
      }
      x = Element::one(algebra_);
    } else {
      fail(ch == '\0' ? std::string("unexpected end of expression") : std::string("unexpected '") + ch + "'");
    }
    if (peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const std::string exponent = digits();
      if (exponent.size() > 6) {
        pos_ = at;
        fail("exponent too large");
      }
      x = x.pow(static_cast<unsigned>(std::stoul(exponent)));
    }
    if (peek() == '*') {
      ++pos_;
      x = x.star();
    }
    return x;
  }

  const AlgebraPtr& algebra_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

void append_runs(const Graph& g, const std::vector<EdgeId>& edges, bool ghost, std::string& out) {
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if (!out.empty()) out += '.';
    out += g.edge(edges[i]).name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    if (ghost) out += '*';
    i = j;
  }
}

}  // namespace

Element parse_element(const AlgebraPtr& algebra, const std::string& text) {
  return ExpressionParser(algebra, text).parse();
}

std::string monomial_to_string(const Graph& g, const Monomial& m) {
  if (m.real.is_vertex() && m.ghost.is_vertex()) return g.vertex_name(m.real.source);
  std::string out;
  append_runs(g, m.real.edges, false, out);
  // β* = e_n* ... e_1*
  std::vector<EdgeId> reversed(m.ghost.edges.rbegin(), m.ghost.edges.rend());
  append_runs(g, reversed, true, out);
  return out;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  const Graph& g = x.algebra()->graph();
  std::string out;
  bool first = true;
  for (const auto& [m, k] : x.terms()) {
    const bool negative = k.is_negative();
    const Scalar magnitude = negative ? -k : k;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + " ";
    out += monomial_to_string(g, m);
    first = false;
  }
  return out;
}

}  // namespace lpa
