#include "chernlab/invariants.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <string>

#include "chernlab/ideal_ops.hpp"

namespace chern {

namespace {

const Ideal& checked_homogeneous(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw Unsupported("non-homogeneous input");
  return ideal;
}

ReducedGB proper_gb(const Ideal& ideal) {
  ReducedGB gb = buchberger(ideal);
  if (gb.is_unit_ideal()) throw PreconditionError("the defining ideal is the unit ideal");
  return gb;
}

void check_operand(const QuotientModule& m, const Ideal& ideal) {
  if (!m.ring().compatible(ideal.ring())) throw RingMismatch();
  checked_homogeneous(ideal);
}

Ideal basis_ideal(const ReducedGB& gb) { return Ideal(gb.ring(), gb.basis()); }

void require_finite_length(const ReducedGB& gb) {
  if (!gb.is_unit_ideal() && krull_dim(gb) != 0) {
    throw PreconditionError("J + I is not zero-dimensional");
  }
}

mpz_class binomial(long n, unsigned long k) {
  if (n < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), k);
  return out;
}

// (-1)^i C(n + s - i, s - i).
mpz_class basis_value(unsigned s, unsigned i, long n) {
  mpz_class v = binomial(n + static_cast<long>(s - i), s - i);
  return i % 2 ? mpz_class(-v) : v;
}

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw ResourceLimit("integer overflow in series arithmetic");
  return v.get_si();
}

std::vector<std::int64_t> solve_window(const IntegerSeries& series, unsigned s) {
  const unsigned size = s + 1;
  const unsigned first = series.last() - s;
  std::vector<std::vector<mpq_class>> rows(size, std::vector<mpq_class>(size + 1));
  for (unsigned r = 0; r < size; ++r) {
    const long n = first + r;
    for (unsigned i = 0; i < size; ++i) rows[r][i] = basis_value(s, i, n);
    rows[r][size] = series.at(first + r);
  }
  for (unsigned col = 0; col < size; ++col) {
    unsigned piv = col;
    while (piv < size && rows[piv][col] == 0) ++piv;
    if (piv == size) throw Error("singular binomial fit");
    std::swap(rows[piv], rows[col]);
    for (unsigned r = 0; r < size; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      mpq_class f = rows[r][col] / rows[col][col];
      for (unsigned c = col; c <= size; ++c) rows[r][c] -= f * rows[col][c];
    }
  }
  std::vector<std::int64_t> coeffs;
  for (unsigned i = 0; i < size; ++i) {
    mpq_class c = rows[i][size] / rows[i][i];
    c.canonicalize();
    if (c.get_den() != 1) throw Error("binomial fit has a non-integer coefficient");
    coeffs.push_back(to_int64(c.get_num()));
  }
  return coeffs;
}

template <class Compute>
SeriesFit adaptive_fit(Compute compute, unsigned s, const SeriesOptions& options) {
  unsigned nmax = std::min(options.nmax, options.nmax_cap);
  for (;;) {
    IntegerSeries series = compute(nmax);
    try {
      BinomialPolynomial poly = fit_binomial(series, s, options.window);
      return SeriesFit{std::move(series), std::move(poly)};
    } catch (const NotStabilized& e) {
      if (nmax >= options.nmax_cap) {
        throw SeriesNotStabilized(std::string(e.what()) + " (nmax " + std::to_string(nmax) + ")",
                                  std::move(series));
      }
      nmax = std::min(2 * nmax, options.nmax_cap);
    }
  }
}

}  // namespace

QuotientModule::QuotientModule(Ideal defining)
    : ideal_(std::move(checked_homogeneous(defining))),
      gb_(proper_gb(ideal_)),
      dim_(krull_dim(gb_)) {}

std::int64_t BinomialPolynomial::operator()(std::int64_t n) const {
  mpz_class total = 0;
  for (unsigned i = 0; i < coeffs.size(); ++i) {
    total += basis_value(degree, i, static_cast<long>(n)) * coeffs[i];
  }
  return to_int64(total);
}

std::vector<ReducedGB> power_bases(const QuotientModule& m, const Ideal& ideal, unsigned nmax) {
  check_operand(m, ideal);
  const RingSpec& ring = m.ring();
  Ideal gens(ring, linear_basis(ideal.generators()));
  std::vector<ReducedGB> out;
  out.push_back(buchberger(m.ideal() + gens));
  require_finite_length(out.front());
  for (unsigned n = 1; n <= nmax; ++n) {
    Ideal next = m.ideal() + product(basis_ideal(out.back()), gens);
    out.push_back(buchberger(next));
  }
  return out;
}

std::size_t colength(const QuotientModule& m, const Ideal& ideal) {
  check_operand(m, ideal);
  ReducedGB gb = buchberger(m.ideal() + ideal);
  require_finite_length(gb);
  return vdim_artinian(gb);
}

IntegerSeries hs_series(const QuotientModule& m, const Ideal& ideal, unsigned nmax) {
  IntegerSeries out;
  for (const auto& gb : power_bases(m, ideal, nmax)) {
    out.values.push_back(static_cast<std::int64_t>(vdim_artinian(gb)));
  }
  return out;
}

namespace {

std::size_t socle_of(const ReducedGB& gb) {
  if (gb.is_unit_ideal()) return 0;
  Ideal base = basis_ideal(gb);
  std::size_t whole = vdim_artinian(gb);
  std::size_t top = vdim_artinian(colon(base, Ideal::maximal(base.ring())));
  return whole - top;
}

}  // namespace

Ideal socle_ideal(const QuotientModule& m, const Ideal& ideal) {
  check_operand(m, ideal);
  ReducedGB gb = buchberger(m.ideal() + ideal);
  require_finite_length(gb);
  if (gb.is_unit_ideal()) return basis_ideal(gb);
  Ideal base = basis_ideal(gb);
  return Ideal(m.ring(), buchberger(colon(base, Ideal::maximal(base.ring()))).basis());
}

std::size_t socle_dim(const QuotientModule& m, const Ideal& ideal) {
  check_operand(m, ideal);
  ReducedGB gb = buchberger(m.ideal() + ideal);
  require_finite_length(gb);
  return socle_of(gb);
}

IntegerSeries ir_series(const QuotientModule& m, const Ideal& ideal, unsigned nmax) {
  IntegerSeries out;
  for (const auto& gb : power_bases(m, ideal, nmax)) {
    out.values.push_back(static_cast<std::int64_t>(socle_of(gb)));
  }
  return out;
}

BinomialPolynomial fit_binomial(const IntegerSeries& series, unsigned s, unsigned window) {
  const std::size_t needed = std::size_t{s} + 1 + window;
  if (series.values.size() < needed) {
    throw NotStabilized("series has " + std::to_string(series.values.size()) +
                        " values, at least " + std::to_string(needed) + " needed");
  }
  BinomialPolynomial poly{s, solve_window(series, s), series.last()};
  while (poly.n_star > series.start && poly(poly.n_star - 1) == series.at(poly.n_star - 1)) {
    --poly.n_star;
  }
  if (series.last() - poly.n_star + 1 < needed) {
    throw NotStabilized("series agrees with a degree " + std::to_string(s) +
                        " polynomial only from n = " + std::to_string(poly.n_star));
  }
  return poly;
}

SeriesFit hilbert_coeffs(const QuotientModule& m, const Ideal& ideal, const SeriesOptions& options) {
  const auto s = static_cast<unsigned>(m.dim());
  return adaptive_fit([&](unsigned nmax) { return hs_series(m, ideal, nmax); }, s, options);
}

SeriesFit irreducible_coeffs(const QuotientModule& m, const Ideal& ideal,
                             const SeriesOptions& options) {
  if (m.dim() == 0) throw PreconditionError("irreducible coefficients need dim M >= 1");
  const auto s = static_cast<unsigned>(m.dim() - 1);
  return adaptive_fit([&](unsigned nmax) { return ir_series(m, ideal, nmax); }, s, options);
}

TorsionPart h0m(const QuotientModule& m) {
  Saturation sat = saturate(m.ideal(), Ideal::maximal(m.ring()));
  ReducedGB k = buchberger(sat.ideal);
  unsigned top = 0;
  for (const auto& g : k.basis()) top = std::max(top, g.degree());
  std::size_t length = 0;
  for (unsigned d = 0;; ++d) {
    std::size_t diff = hilbert_function(m.gb(), d) - hilbert_function(k, d);
    length += diff;
    if (d >= top && diff == 0) break;
  }
  return TorsionPart{Ideal(m.ring(), k.basis()), sat.exponent, length};
}

}  // namespace chern
