#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace chern {

/// An element of the coefficient field: either a rational number in lowest
/// terms (GMP keeps mpq_class canonical) or a residue in [0, p).
///
/// Elements carry no modulus; arithmetic goes through the owning Field.
class FieldElement {
 public:
  FieldElement() : value_(std::uint32_t{0}) {}
  explicit FieldElement(std::uint32_t residue) : value_(residue) {}
  explicit FieldElement(mpq_class q) : value_(std::move(q)) {}

  bool is_residue() const noexcept { return value_.index() == 0; }
  std::uint32_t residue() const { return std::get<0>(value_); }
  const mpq_class& rational() const { return std::get<1>(value_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.is_residue()) return a.residue() == b.residue();
    return a.rational() == b.rational();
  }

 private:
  std::variant<std::uint32_t, mpq_class> value_;
};

/// The base field: Q or F_p with p a prime below 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws PreconditionError when p is not a prime in [2, 2^31).
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  /// "Q" or "F<p>", the spelling accepted by the ring parser.
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(long long n) const;
  FieldElement from_integer(const mpz_class& n) const;
  /// Throws PreconditionError when the denominator vanishes mod p.
  FieldElement from_rational(const mpq_class& q) const;

  bool is_zero(const FieldElement& a) const {
    return a.is_residue() ? a.residue() == 0 : sgn(a.rational()) == 0;
  }
  bool is_one(const FieldElement& a) const {
    return a.is_residue() ? a.residue() == 1 : a.rational() == 1;
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const {
    if (p_ != 0) {
      std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
      return FieldElement(static_cast<std::uint32_t>(s >= p_ ? s - p_ : s));
    }
    return FieldElement(mpq_class(a.rational() + b.rational()));
  }
  FieldElement sub(const FieldElement& a, const FieldElement& b) const {
    if (p_ != 0) {
      std::uint32_t x = a.residue(), y = b.residue();
      return FieldElement(x >= y ? x - y : x + (p_ - y));
    }
    return FieldElement(mpq_class(a.rational() - b.rational()));
  }
  FieldElement mul(const FieldElement& a, const FieldElement& b) const {
    if (p_ != 0) {
      return FieldElement(
          static_cast<std::uint32_t>(std::uint64_t{a.residue()} * b.residue() % p_));
    }
    return FieldElement(mpq_class(a.rational() * b.rational()));
  }
  FieldElement neg(const FieldElement& a) const {
    if (p_ != 0) return FieldElement(a.residue() == 0 ? 0u : p_ - a.residue());
    return FieldElement(mpq_class(-a.rational()));
  }
  /// Throws PreconditionError on zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

  /// Residues print as the symmetric representative in (-p/2, p/2];
  /// rationals print as "n" or "n/d".
  std::string to_string(const FieldElement& a) const;
  /// Sign used by the printer: -1 when the printed form starts with '-'.
  int sign(const FieldElement& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace chern
