#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace chern {

/// Exponent vector of fixed width with a cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// The monomial 1 in `width` variables.
  explicit Monomial(std::size_t width) : exps_(width, 0) {}
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t width, std::size_t index, unsigned power = 1);

  std::size_t width() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  bool is_one() const noexcept { return degree_ == 0; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  /// Number of variables with a positive exponent.
  std::size_t support_size() const noexcept;

  /// Throws Error on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  std::vector<unsigned> exponents() const { return {exps_.begin(), exps_.end()}; }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  boost::container::small_vector<Exponent, 10> exps_;
  unsigned degree_ = 0;
};

/// Total, multiplicative well-order on monomials of one width.
///
/// Elimination(k) compares the first k variables by grevlex and breaks ties by
/// grevlex on the remaining variables, so any polynomial whose leading
/// monomial avoids the first block lies entirely in the second one.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder elimination(std::size_t k) { return MonomialOrder(Kind::Elimination, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  std::string name() const;

  /// Negative, zero or positive as a is smaller, equal or larger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) noexcept {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

}  // namespace chern

template <>
struct std::hash<chern::Monomial> {
  std::size_t operator()(const chern::Monomial& m) const noexcept { return m.hash(); }
};
