#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chernlab/field.hpp"
#include "chernlab/monomial.hpp"

namespace chern {

/// Polynomial ring k[x_1..x_n] together with its default monomial order.
/// Cheap to copy; the variable table is shared.
class RingSpec {
 public:
  /// Throws PreconditionError on empty, malformed or duplicate names.
  RingSpec(Field field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::grevlex());

  const Field& field() const noexcept { return data_->field; }
  const std::vector<std::string>& variables() const noexcept { return data_->variables; }
  std::size_t width() const noexcept { return data_->variables.size(); }
  const MonomialOrder& order() const noexcept { return data_->order; }

  RingSpec with_order(MonomialOrder order) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same field and the same variables in the same positions; orders may differ.
  bool compatible(const RingSpec& other) const noexcept;

  /// Round-trips through parse_ring for grevlex and lex rings.
  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
    return a.compatible(b) && a.order() == b.order();
  }

 private:
  struct Data {
    Field field;
    std::vector<std::string> variables;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> data_;
};

/// Parses `("Q" | "F" <prime>) "[" ident ("," ident)* "]" [grevlex|lex]`.
/// Throws ParseError (with position) or PreconditionError (p not prime).
RingSpec parse_ring(std::string_view text);

bool is_identifier(std::string_view name);

}  // namespace chern
