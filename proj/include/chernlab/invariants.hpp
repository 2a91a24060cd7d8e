#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chernlab/errors.hpp"
#include "chernlab/groebner.hpp"

namespace chern {

/// The cyclic module M = S/J for a proper homogeneous ideal J.
class QuotientModule {
 public:
  /// Throws Unsupported for non-homogeneous J and PreconditionError for J = (1).
  explicit QuotientModule(Ideal defining);
  /// M = S.
  static QuotientModule free(const RingSpec& ring) { return QuotientModule(Ideal(ring)); }

  const RingSpec& ring() const noexcept { return ideal_.ring(); }
  const Ideal& ideal() const noexcept { return ideal_; }
  const ReducedGB& gb() const noexcept { return gb_; }
  std::size_t dim() const noexcept { return dim_; }

 private:
  Ideal ideal_;
  ReducedGB gb_;
  std::size_t dim_;
};

/// Values h(start), h(start + 1), ...
struct IntegerSeries {
  unsigned start = 0;
  std::vector<std::int64_t> values;

  unsigned last() const noexcept { return start + static_cast<unsigned>(values.size()) - 1; }
  std::int64_t at(unsigned n) const { return values.at(n - start); }
};

/// P(n) = sum_i (-1)^i c_i C(n + s - i, s - i).
struct BinomialPolynomial {
  unsigned degree = 0;
  std::vector<std::int64_t> coeffs;
  /// Least index from which the source series agrees with P.
  unsigned n_star = 0;

  std::int64_t operator()(std::int64_t n) const;
};

struct SeriesOptions {
  unsigned nmax = 8;
  unsigned nmax_cap = 64;
  unsigned window = 3;
};

struct SeriesFit {
  IntegerSeries series;
  BinomialPolynomial poly;
};

/// NotStabilized carrying the longest series computed before giving up.
class SeriesNotStabilized : public NotStabilized {
 public:
  SeriesNotStabilized(const std::string& what, IntegerSeries partial)
      : NotStabilized(what), partial_(std::move(partial)) {}
  const IntegerSeries& partial() const noexcept { return partial_; }

 private:
  IntegerSeries partial_;
};

/// Reduced bases of J + I^{n+1} for n = 0..nmax, powers built incrementally.
std::vector<ReducedGB> power_bases(const QuotientModule& m, const Ideal& ideal, unsigned nmax);

/// ℓ(M/IM) = vdim(J + I). Requires dim S/(J + I) = 0.
std::size_t colength(const QuotientModule& m, const Ideal& ideal);

/// h(n) = ℓ(M/I^{n+1}M) for n = 0..nmax.
IntegerSeries hs_series(const QuotientModule& m, const Ideal& ideal, unsigned nmax);

/// (J + I) : m as an ideal of S.
Ideal socle_ideal(const QuotientModule& m, const Ideal& ideal);
/// dim_k Soc(M/IM) = vdim(J + I) - vdim((J + I) : m).
std::size_t socle_dim(const QuotientModule& m, const Ideal& ideal);

/// ir(n) = socle_dim(M, I^{n+1}) for n = 0..nmax.
IntegerSeries ir_series(const QuotientModule& m, const Ideal& ideal, unsigned nmax);

/// Fits the last s + 1 values exactly and walks backwards to the least n*
/// from which the series agrees. Throws NotStabilized when fewer than
/// s + 1 + window values agree.
BinomialPolynomial fit_binomial(const IntegerSeries& series, unsigned s, unsigned window = 3);

/// (e_0, ..., e_s) with s = dim M, nmax doubled up to options.nmax_cap.
SeriesFit hilbert_coeffs(const QuotientModule& m, const Ideal& ideal, const SeriesOptions& options = {});
/// (f_0, ..., f_{s-1}); requires dim M >= 1.
SeriesFit irreducible_coeffs(const QuotientModule& m, const Ideal& ideal,
                             const SeriesOptions& options = {});

struct TorsionPart {
  /// K = J : m^∞, so that H^0_m(M) = K/J.
  Ideal saturation;
  unsigned exponent;
  std::size_t length;
};
TorsionPart h0m(const QuotientModule& m);

}  // namespace chern
