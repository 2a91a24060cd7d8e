#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "chernlab/groebner.hpp"

namespace chern {

/// I ∩ k[keep], via an elimination order that puts the other variables first.
/// Throws PreconditionError on an empty keep set.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep);

/// I1 ∩ I2 = (t·I1 + (1 - t)·I2) ∩ k[x].
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);

/// I : (f) = (I ∩ (f)) / f.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// I : J as the intersection of I : (g) over the generators g of J.
/// Throws PreconditionError when J is the zero ideal.
Ideal colon(const Ideal& ideal, const Ideal& by);

struct Saturation {
  Ideal ideal;
  /// Least N with I : J^N = I : J^(N+1).
  unsigned exponent;
};
/// I : J^∞ by iterated colon until the reduced bases stabilise.
Saturation saturate(const Ideal& ideal, const Ideal& by);

/// Krull dimension of S/I by maximal independent sets of the leading-term
/// ideal. Throws PreconditionError for the unit ideal.
std::size_t krull_dim(const Ideal& ideal);
std::size_t krull_dim(const ReducedGB& gb);

/// Monomials outside the leading-term ideal; precondition: dim S/I = 0.
std::vector<Monomial> standard_monomials(const ReducedGB& gb);
/// dim_k S/I. Throws PreconditionError when the ideal is not zero-dimensional.
std::size_t vdim_artinian(const Ideal& ideal);
std::size_t vdim_artinian(const ReducedGB& gb);

/// Number of standard monomials of total degree d (the Hilbert function of
/// S/I in degree d for homogeneous I).
std::size_t hilbert_function(const ReducedGB& gb, unsigned d);

/// For homogeneous, proper I: true iff dim S/I = 0.
/// Throws Unsupported for non-homogeneous input.
bool is_m_primary(const Ideal& ideal);

/// Ideal membership and equality by reduced bases.
bool contains(const Ideal& ideal, const Polynomial& f);
bool is_subset(const Ideal& a, const Ideal& b);
bool same_ideal(const Ideal& a, const Ideal& b);

/// Echelon form of the k-linear span of `polys` (distinct leading
/// monomials, monic); zero polynomials and linear dependencies are dropped.
std::vector<Polynomial> linear_basis(std::vector<Polynomial> polys);

/// Product ideal with a linearly reduced generator list.
Ideal product(const Ideal& a, const Ideal& b);
/// I^e for e >= 1; I^0 is the unit ideal.
Ideal power(const Ideal& ideal, unsigned e);

/// Divides f by g exactly; throws Error when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Parses a generator list, or an intersection "(list) cap (list) cap ...".
Ideal parse_ideal(std::string_view text, const RingSpec& ring);

}  // namespace chern
