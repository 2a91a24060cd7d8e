#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chernlab/polynomial.hpp"

namespace chern {

/// Generator list of an ideal. Zero generators are dropped, so the zero
/// ideal has an empty list.
class Ideal {
 public:
  explicit Ideal(RingSpec ring) : ring_(std::move(ring)) {}
  /// Throws RingMismatch when a generator lives in an incompatible ring.
  Ideal(RingSpec ring, std::vector<Polynomial> generators);

  static Ideal unit(const RingSpec& ring);
  /// The ideal generated by all variables.
  static Ideal maximal(const RingSpec& ring);

  const RingSpec& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_homogeneous() const noexcept;

  /// Canonical text of the generator list; used as a cache key.
  std::string fingerprint() const;
  std::string to_string() const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

 private:
  RingSpec ring_;
  std::vector<Polynomial> generators_;
};

struct GroebnerOptions {
  /// Maximal number of S-pairs reduced before ResourceLimit is thrown.
  std::size_t max_pairs = 1'000'000;
};

/// The reduced Gröbner basis of an ideal under one order: monic,
/// inter-reduced, sorted ascending by leading monomial.
class ReducedGB {
 public:
  ReducedGB(RingSpec ring, std::vector<Polynomial> basis, std::string source);

  /// The source ring re-ordered by the basis order.
  const RingSpec& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_.order(); }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const std::string& source_fingerprint() const noexcept { return source_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }

  bool is_zero_ideal() const noexcept { return basis_.empty(); }
  bool is_unit_ideal() const noexcept;
  bool is_monomial() const noexcept;

  /// Ideal generated by the basis, in the basis ring.
  Ideal ideal() const { return Ideal(ring_, basis_); }
  bool contains(const Polynomial& f) const;

  friend bool operator==(const ReducedGB& a, const ReducedGB& b) {
    return a.ring_ == b.ring_ && a.basis_ == b.basis_;
  }

 private:
  RingSpec ring_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
  std::string source_;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer–Möller criteria. Results are memoised per (ideal, order).
/// Throws ResourceLimit when options.max_pairs is exceeded.
ReducedGB buchberger(const Ideal& ideal, const MonomialOrder& order,
                     const GroebnerOptions& options = {});
inline ReducedGB buchberger(const Ideal& ideal) { return buchberger(ideal, ideal.ring().order()); }

/// Remainder of f on division by the basis; zero iff f lies in the ideal.
/// The result is expressed in f's ring.
Polynomial normal_form(const Polynomial& f, const ReducedGB& gb);

/// Drops every memoised basis.
void clear_groebner_cache();
std::size_t groebner_cache_size();

}  // namespace chern
