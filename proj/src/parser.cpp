// Recursive-descent parser for polynomial text.
//
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := factor ('*' factor)*
//   factor  := '-' factor | power
//   power   := primary ['^' integer]
//   primary := integer ['/' integer] | ident | '(' expr ')'

#include <cctype>

#include "chernlab/errors.hpp"
#include "chernlab/polynomial.hpp"

namespace chern {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingSpec& ring) : text_(text), ring_(ring) {}

  Polynomial parse_all() {
    for (char c : text_) {
      if (static_cast<unsigned char>(c) > 127) throw ParseError("non-ASCII input");
    }
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      if (text_[pos_] == '/') throw ParseError("division is not supported", pos_);
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = product();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (accept('+')) {
        acc = acc + product();
      } else if (accept('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc = acc * factor();
      } else if (peek() == '/') {
        throw ParseError("division is not supported", pos_);
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip_ws();
    if (accept('-')) return -factor();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t at = pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) throw ParseError("malformed exponent", at);
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 65535) throw ParseError("malformed exponent", at);
    if (peek() == '.' || std::isalpha(static_cast<unsigned char>(peek()))) {
      throw ParseError("malformed exponent", at);
    }
    return base.pow(static_cast<unsigned>(e));
  }

  Polynomial primary() {
    skip_ws();
    std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      skip_ws();
      if (peek() == '/') {
        std::size_t slash = pos_;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          throw ParseError("division is not supported", slash);
        }
        mpz_class den = integer();
        if (den == 0) throw ParseError("zero denominator", slash);
        mpq_class q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring_, ring_.field().from_rational(q));
      }
      return Polynomial::constant(ring_, ring_.field().from_integer(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto index = ring_.index_of(name);
      if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", at);
      return Polynomial::variable(ring_, *index);
    }
    if (c == '\0') throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() == c && c != '\0') {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const RingSpec& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingSpec& ring) {
  return PolyParser(text, ring).parse_all();
}

std::vector<Polynomial> parse_poly_list(std::string_view text, const RingSpec& ring) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    bool blank = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (blank) throw ParseError("empty list entry", start);
    try {
      out.push_back(parse_poly(piece, ring));
    } catch (const ParseError& e) {
      if (e.position() == std::string::npos) throw;
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                       start + e.position());
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  flush(text.size());
  return out;
}

}  // namespace chern
