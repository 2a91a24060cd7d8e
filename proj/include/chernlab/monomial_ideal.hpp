#pragma once

#include <cstddef>
#include <vector>

#include "chernlab/groebner.hpp"

namespace chern {

/// A monomial ideal stored by its minimal generators (sorted, so equal ideals
/// compare equal). No generators means the zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t width) : width_(width) {}
  MonomialIdeal(std::size_t width, std::vector<Monomial> generators);

  /// Throws Unsupported when the reduced basis is not made of monomials.
  static MonomialIdeal from_ideal(const Ideal& ideal);

  std::size_t width() const noexcept { return width_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const noexcept;
  /// True when `other` ⊆ *this.
  bool contains(const MonomialIdeal& other) const noexcept;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  /// *this : (m) = (g / gcd(g, m)).
  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal colon(const MonomialIdeal& other) const;

  Ideal to_ideal(const RingSpec& ring) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) noexcept {
    return a.width_ == b.width_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t width_;
  std::vector<Monomial> gens_;
};

/// Irreducible monomial ideal (x_a^{e_a} : e_a > 0), stored as the exponent
/// vector e. The all-zero vector stands for the zero ideal.
struct IrreducibleComponent {
  Monomial exponents;

  MonomialIdeal ideal() const;
  /// Variables carrying a positive exponent: the radical's generators.
  std::vector<std::size_t> support() const;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

/// A monomial prime (x_a : a ∈ variables).
struct MonomialPrime {
  std::vector<std::size_t> variables;
  /// dim S/p = n - |variables|.
  std::size_t dimension;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
};

struct PrimaryComponent {
  MonomialIdeal primary;
  MonomialPrime radical;
};

/// Ascending chain K_0 = J ⊆ K_1 ⊆ ... ⊆ K_t = (1) stored as levels[i] = K_i;
/// D_i = K_i / J has dimension dims[i - 1], and dims is strictly increasing
/// with dims.back() = dim S/J.
struct FiltrationChain {
  Ideal base;
  std::vector<Ideal> levels;
  std::vector<std::size_t> dims;

  std::size_t length() const noexcept { return dims.size(); }
};

bool is_monomial_ideal(const Ideal& ideal);

/// Irredundant irreducible decomposition by recursive splitting of mixed
/// generators. Throws Unsupported for non-monomial input and
/// PreconditionError for the unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);
std::vector<IrreducibleComponent> irreducible_decomposition(const Ideal& ideal);

/// Irreducible components grouped by radical and intersected.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal);
std::vector<PrimaryComponent> primary_decomposition(const Ideal& ideal);

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);
std::vector<MonomialPrime> associated_primes(const Ideal& ideal);

/// Throws Unsupported("non-monomial filtration") for non-monomial input.
FiltrationChain dimension_filtration(const Ideal& ideal);
/// K_{t-1} of the dimension filtration; J itself when t = 1.
Ideal unmixed_component(const Ideal& ideal);

}  // namespace chern
