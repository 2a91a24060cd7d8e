#include "chernlab/ring.hpp"

#include <cctype>
#include <unordered_set>

#include "chernlab/errors.hpp"

namespace chern {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  if (!alpha(name[0])) return false;
  for (char c : name) {
    if (!alpha(c) && !std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

RingSpec::RingSpec(Field field, std::vector<std::string> variables, MonomialOrder order) {
  if (variables.empty()) throw PreconditionError("a ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_identifier(v)) throw PreconditionError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable '" + v + "'");
  }
  data_ = std::make_shared<const Data>(Data{field, std::move(variables), order});
}

RingSpec RingSpec::with_order(MonomialOrder order) const {
  if (order == data_->order) return *this;
  RingSpec r(*this);
  r.data_ = std::make_shared<const Data>(Data{data_->field, data_->variables, order});
  return r;
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  const auto& vars = data_->variables;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return i;
  }
  return std::nullopt;
}

bool RingSpec::compatible(const RingSpec& other) const noexcept {
  if (data_ == other.data_) return true;
  return field() == other.field() && variables() == other.variables();
}

std::string RingSpec::to_string() const {
  std::string s = field().name() + "[";
  for (std::size_t i = 0; i < width(); ++i) {
    if (i) s += ",";
    s += variables()[i];
  }
  s += "] " + order().name();
  return s;
}

namespace {

class RingParser {
 public:
  explicit RingParser(std::string_view text) : text_(text) {}

  RingSpec parse() {
    skip_ws();
    Field field = parse_field();
    skip_ws();
    expect('[');
    std::vector<std::string> vars;
    std::unordered_set<std::string> seen;
    do {
      skip_ws();
      std::size_t at = pos_;
      std::string name = parse_ident();
      if (!seen.insert(name).second) throw ParseError("duplicate variable '" + name + "'", at);
      vars.push_back(std::move(name));
      skip_ws();
    } while (accept(','));
    expect(']');
    skip_ws();
    MonomialOrder order = MonomialOrder::grevlex();
    if (pos_ < text_.size()) {
      std::size_t at = pos_;
      std::string word = parse_ident();
      if (word == "lex") {
        order = MonomialOrder::lex();
      } else if (word != "grevlex") {
        throw ParseError("unknown monomial order '" + word + "'", at);
      }
      skip_ws();
      if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    }
    return RingSpec(field, std::move(vars), order);
  }

 private:
  Field parse_field() {
    if (accept('Q')) return Field::rationals();
    std::size_t at = pos_;
    if (!accept('F')) throw ParseError("expected 'Q' or 'F<prime>'", at);
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 12) throw ParseError("expected a characteristic", start);
    std::uint64_t p = std::stoull(std::string(text_.substr(start, pos_ - start)));
    return Field::prime(p);
  }

  std::string parse_ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view word = text_.substr(start, pos_ - start);
    if (!is_identifier(word)) throw ParseError("expected an identifier", start);
    return std::string(word);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring(std::string_view text) { return RingParser(text).parse(); }

}  // namespace chern
