#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chernlab/field.hpp"
#include "chernlab/monomial.hpp"
#include "chernlab/ring.hpp"

namespace chern {

struct Term {
  Monomial monomial;
  FieldElement coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
  }
};

/// Terms sorted strictly descending under some order, no zero coefficients.
using Terms = std::vector<Term>;

namespace detail {

/// Sorts, merges equal monomials and drops zeros.
void canonicalize(Terms& terms, const MonomialOrder& order, const Field& field);
/// f + c * m * g for canonical f and g.
Terms add_scaled(const Terms& f, const Terms& g, const FieldElement& c, const Monomial& m,
                 const MonomialOrder& order, const Field& field);
Terms multiply(const Terms& f, const Terms& g, const MonomialOrder& order, const Field& field);
void scale(Terms& f, const FieldElement& c, const Field& field);

}  // namespace detail

/// Exact multivariate polynomial, kept canonical: terms sorted descending
/// by the ring's order with nonzero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingSpec ring) : ring_(std::move(ring)) {}
  Polynomial(RingSpec ring, Terms terms);

  static Polynomial constant(const RingSpec& ring, const FieldElement& c);
  static Polynomial constant(const RingSpec& ring, long long c);
  static Polynomial variable(const RingSpec& ring, std::size_t index);
  static Polynomial monomial(const RingSpec& ring, const Monomial& m);

  const RingSpec& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  const Terms& term_vector() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_homogeneous() const noexcept;
  /// Maximal total degree; 0 for the zero polynomial.
  unsigned degree() const noexcept;

  /// Leading term under the ring's order. Throws PreconditionError on zero.
  const Term& leading() const;

  Polynomial operator-() const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// The same polynomial in a compatible ring (typically another order).
  Polynomial in_ring(const RingSpec& ring) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_.compatible(b.ring_) && a.in_ring(b.ring_).terms_ == b.terms_;
  }

 private:
  RingSpec ring_;
  Terms terms_;
};

/// Throws RingMismatch when the rings are not compatible.
Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return poly_add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return poly_sub(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }

/// Order-maximal term of f. Throws PreconditionError on the zero polynomial.
Term leading_term(const Polynomial& f, const MonomialOrder& order);

/// Renders a monomial as "x^2*y" ("1" for the unit).
std::string monomial_to_string(const Monomial& m, const RingSpec& ring);

/// Re-expresses f in `target`, sending variable i of f's ring to
/// variable index_map[i] of `target`.
Polynomial map_variables(const Polynomial& f, const RingSpec& target,
                         std::span<const std::size_t> index_map);

/// Polynomial grammar: integer and rational literals, variables, + - * ^ and
/// parentheses; ^ binds tighter than *, unary minus allowed.
/// Throws ParseError on unknown variables, malformed exponents or division.
Polynomial parse_poly(std::string_view text, const RingSpec& ring);

/// Comma-separated polynomial list (commas inside parentheses do not split).
std::vector<Polynomial> parse_poly_list(std::string_view text, const RingSpec& ring);

}  // namespace chern
