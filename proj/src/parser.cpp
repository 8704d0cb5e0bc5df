#include "frobalg/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

namespace frobalg {

std::string format_generators(const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].str();
  }
  return s + ")";
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }

  bool peek_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string identifier() {
    if (!peek_identifier()) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  // Digits only; the value is reduced modulo `mod` when mod > 0, otherwise
  // it must fit in uint64.
  std::uint64_t number(std::uint64_t mod = 0) {
    if (!peek_digit()) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (mod > 0) {
        v = (v * 10 + d) % mod;
      } else {
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("integer too large");
        v = v * 10 + d;
      }
      ++pos_;
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class PolyParser {
 public:
  PolyParser(Lexer& lex, const PolyRingPtr& ring) : lex_(lex), ring_(ring) {}

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (lex_.accept('-')) {
      negate = true;
    } else {
      lex_.accept('+');
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (lex_.accept('+')) {
        acc = acc + term();
      } else if (lex_.accept('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (lex_.accept('^')) {
      if (lex_.peek() == '-') lex_.fail("negative exponent");
      if (lex_.peek() == '(') lex_.fail("exponent must be an integer literal");
      std::size_t where = lex_.pos();
      std::uint64_t e = lex_.number();
      if (e > static_cast<std::uint64_t>(std::numeric_limits<Exponent>::max()))
        throw ParseError("exponent too large", where);
      if (base.is_monomial()) {
        Coeff c = ring_->field().pow(base.lead_coeff(), e);
        return Polynomial::monomial(ring_, base.lead_monomial().scaled(static_cast<std::int64_t>(e)), c);
      }
      return base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    if (lex_.accept('(')) {
      Polynomial inner = expr();
      lex_.expect(')');
      return inner;
    }
    if (lex_.peek_digit()) {
      std::uint64_t v = lex_.number(ring_->characteristic());
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (lex_.peek_identifier()) {
      std::size_t where = lex_.pos();
      std::string name = lex_.identifier();
      int idx = ring_->index_of(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", where);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (lex_.at_end()) lex_.fail("unexpected end of input");
    lex_.fail(std::string("unexpected character '") + lex_.peek() + "'");
  }

  Lexer& lex_;
  const PolyRingPtr& ring_;
};

std::vector<Polynomial> generator_list(Lexer& lex, const PolyRingPtr& ring, char open, char close) {
  std::vector<Polynomial> gens;
  lex.expect(open);
  if (lex.accept(close)) return gens;
  PolyParser parser(lex, ring);
  do {
    gens.push_back(parser.expr());
  } while (lex.accept(','));
  lex.expect(close);
  return gens;
}

}  // namespace

Ring parse_ring(std::string_view text) {
  Lexer lex(text);
  std::size_t start = lex.pos();
  if (!lex.accept('F') || !lex.accept('_')) throw ParseError("ring must start with F_<p>", start);
  std::size_t where = lex.pos();
  std::uint64_t p = lex.number();
  if (p >= (1ull << 31) || !is_prime(p))
    throw ParseError("characteristic " + std::to_string(p) + " is not a prime below 2^31", where);
  lex.expect('[');
  std::vector<std::string> names;
  if (!lex.accept(']')) {
    do {
      where = lex.pos();
      std::string name = lex.identifier();
      for (const auto& n : names)
        if (n == name) throw ParseError("duplicate variable '" + name + "'", where);
      names.push_back(name);
    } while (lex.accept(','));
    lex.expect(']');
  }
  if (names.size() > kMaxVars)
    throw ParseError("at most " + std::to_string(kMaxVars) + " variables supported", where);
  PolyRingPtr free = make_poly_ring(static_cast<std::uint32_t>(p), names);
  std::vector<Polynomial> quotient;
  if (lex.accept('/')) quotient = generator_list(lex, free, '(', ')');
  if (!lex.at_end()) lex.fail("trailing input");
  return Ring(free, std::move(quotient));
}

Polynomial parse_poly(std::string_view text, const Ring& ring) {
  Lexer lex(text);
  PolyParser parser(lex, ring.free());
  Polynomial f = parser.expr();
  if (!lex.at_end()) lex.fail("trailing input");
  return f;
}

std::vector<Polynomial> parse_generators(std::string_view text, const Ring& ring) {
  Lexer lex(text);
  if (lex.at_end()) return {};
  std::optional<ParseError> list_error;
  if (lex.peek() == '(') {
    // Either a parenthesized list or a bare expression such as "(x+y)^2, z".
    Lexer probe = lex;
    try {
      auto gens = generator_list(probe, ring.free(), '(', ')');
      if (probe.at_end()) return gens;
    } catch (const ParseError& e) {
      list_error = e;
    }
  }
  try {
    PolyParser parser(lex, ring.free());
    std::vector<Polynomial> gens;
    do {
      gens.push_back(parser.expr());
    } while (lex.accept(','));
    if (!lex.at_end()) lex.fail("trailing input");
    return gens;
  } catch (const ParseError&) {
    if (list_error) throw *list_error;
    throw;
  }
}

std::vector<std::vector<Polynomial>> parse_matrix(std::string_view text, const Ring& ring) {
  Lexer lex(text);
  std::vector<std::vector<Polynomial>> rows;
  lex.expect('[');
  if (!lex.accept(']')) {
    do {
      rows.push_back(generator_list(lex, ring.free(), '[', ']'));
    } while (lex.accept(','));
    lex.expect(']');
  }
  if (!lex.at_end()) lex.fail("trailing input");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("ragged matrix", 0);
  return rows;
}

}  // namespace frobalg
