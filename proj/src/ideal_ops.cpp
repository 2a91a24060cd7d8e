#include "chernlab/ideal_ops.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "chernlab/errors.hpp"

namespace chern {

namespace {

std::string fresh_name(const RingSpec& ring, const std::string& stem) {
  std::string name = stem;
  for (int k = 1; ring.index_of(name); ++k) name = stem + std::to_string(k);
  return name;
}

// Basis elements free of the first `block` variables, mapped back through
// `back` (new index -> original index).
Ideal pull_back(const ReducedGB& gb, std::size_t block, const RingSpec& original,
                const std::vector<std::size_t>& back) {
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < block && free; ++i) free = t.monomial[i] == 0;
      if (!free) break;
    }
    if (free) kept.push_back(map_variables(g, original, back));
  }
  return Ideal(original, std::move(kept));
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep) {
  const RingSpec& ring = ideal.ring();
  const std::size_t n = ring.width();
  if (keep.empty()) throw PreconditionError("elimination needs a nonempty set of kept variables");
  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw PreconditionError("variable index out of range");
    kept[k] = true;
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (!kept[i]) order.push_back(i);
  }
  const std::size_t block = order.size();
  if (block == 0) return ideal;
  for (std::size_t i = 0; i < n; ++i) {
    if (kept[i]) order.push_back(i);
  }
  std::vector<std::string> names;
  std::vector<std::size_t> forward(n), back(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    names.push_back(ring.variables()[order[pos]]);
    forward[order[pos]] = pos;
    back[pos] = order[pos];
  }
  RingSpec elim(ring.field(), names, MonomialOrder::elimination(block));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_variables(g, elim, forward));
  return pull_back(buchberger(Ideal(elim, std::move(gens))), block, ring, back);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!a.ring().compatible(b.ring())) throw RingMismatch();
  const RingSpec& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  const std::size_t n = ring.width();
  std::vector<std::string> names{fresh_name(ring, "t_")};
  names.insert(names.end(), ring.variables().begin(), ring.variables().end());
  RingSpec ext(ring.field(), names, MonomialOrder::elimination(1));
  std::vector<std::size_t> forward(n), back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    forward[i] = i + 1;
    back[i + 1] = i;
  }
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * map_variables(f, ext, forward));
  for (const auto& g : b.generators()) {
    gens.push_back(one_minus_t * map_variables(g, ext, forward));
  }
  return pull_back(buchberger(Ideal(ext, std::move(gens))), 1, ring, back);
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw PreconditionError("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  const RingSpec& ring = f.ring();
  const Field& k = ring.field();
  Polynomial gg = g.in_ring(ring);
  const Term& lg = gg.leading();
  FieldElement lg_inv = k.inv(lg.coeff);
  Polynomial rem = f;
  Terms quotient;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    if (!lg.monomial.divides(lr.monomial)) throw Error("inexact polynomial division");
    Monomial q = lr.monomial / lg.monomial;
    FieldElement c = k.mul(lr.coeff, lg_inv);
    quotient.push_back(Term{q, c});
    rem = rem - gg.times(q, c);
  }
  return Polynomial(ring, std::move(quotient));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (!ideal.ring().compatible(f.ring())) throw RingMismatch();
  if (f.is_zero()) throw PreconditionError("colon by the zero ideal");
  const RingSpec& ring = ideal.ring();
  if (f.is_constant()) return ideal;
  if (ideal.is_zero()) return ideal;
  Ideal meet = intersect(ideal, Ideal(ring, {f}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(exact_divide(h, f));
  return Ideal(ring, std::move(gens));
}

Ideal colon(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) throw PreconditionError("colon by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) {
    Ideal part = colon(ideal, g);
    if (buchberger(part).is_unit_ideal()) continue;
    parts.push_back(std::move(part));
  }
  if (parts.empty()) return Ideal::unit(ideal.ring());
  return intersect(parts);
}

Saturation saturate(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) throw PreconditionError("saturation by the zero ideal");
  const RingSpec& ring = ideal.ring();
  Ideal current(ring, buchberger(ideal).basis());
  unsigned exponent = 0;
  for (;;) {
    Ideal next(ring, buchberger(colon(current, by)).basis());
    if (same_ideal(next, current)) return Saturation{current, exponent};
    current = std::move(next);
    ++exponent;
  }
}

std::size_t krull_dim(const ReducedGB& gb) {
  if (gb.is_unit_ideal()) throw PreconditionError("unit ideal");
  const std::size_t n = gb.ring().width();
  if (n > 24) throw Unsupported("dimension of rings with more than 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i]) s |= 1u << i;
    }
    supports.push_back(s);
  }
  std::size_t best = 0;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t u = 0;; ++u) {
    auto size = static_cast<std::size_t>(std::popcount(u));
    if (size > best) {
      bool independent = std::all_of(supports.begin(), supports.end(),
                                     [&](std::uint32_t s) { return (s & ~u) != 0; });
      if (independent) best = size;
    }
    if (u == full) break;
  }
  return best;
}

std::size_t krull_dim(const Ideal& ideal) { return krull_dim(buchberger(ideal)); }

namespace {

bool in_lead_ideal(const ReducedGB& gb, const Monomial& m) {
  return std::any_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                     [&](const Monomial& l) { return l.divides(m); });
}

void require_artinian(const ReducedGB& gb) {
  if (gb.is_unit_ideal()) return;
  if (krull_dim(gb) != 0) throw PreconditionError("ideal is not zero-dimensional");
}

}  // namespace

std::vector<Monomial> standard_monomials(const ReducedGB& gb) {
  require_artinian(gb);
  std::vector<Monomial> out;
  if (gb.is_unit_ideal()) return out;
  const std::size_t n = gb.ring().width();
  // Standard monomials form an order ideal, so each degree is obtained from
  // the previous one; multiplying only by x_i with i >= the last support
  // index enumerates each monomial once.
  std::vector<Monomial> layer{Monomial(n)};
  while (!layer.empty()) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      std::size_t last = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i]) last = i;
      }
      for (std::size_t i = last; i < n; ++i) {
        Monomial up = m * Monomial::variable(n, i);
        if (!in_lead_ideal(gb, up)) next.push_back(std::move(up));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::size_t vdim_artinian(const ReducedGB& gb) { return standard_monomials(gb).size(); }
std::size_t vdim_artinian(const Ideal& ideal) { return vdim_artinian(buchberger(ideal)); }

std::size_t hilbert_function(const ReducedGB& gb, unsigned d) {
  if (gb.is_unit_ideal()) return 0;
  const std::size_t n = gb.ring().width();
  std::size_t count = 0;
  Monomial m(n);
  auto walk = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == n) {
      m.set(var, remaining);
      if (!in_lead_ideal(gb, m)) ++count;
      m.set(var, 0);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      m.set(var, e);
      self(self, var + 1, remaining - e);
    }
    m.set(var, 0);
  };
  walk(walk, 0, d);
  return count;
}

bool is_m_primary(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw Unsupported("non-homogeneous ideal");
  ReducedGB gb = buchberger(ideal);
  if (gb.is_unit_ideal()) throw PreconditionError("unit ideal");
  return krull_dim(gb) == 0;
}

bool contains(const Ideal& ideal, const Polynomial& f) {
  return normal_form(f, buchberger(ideal)).is_zero();
}

bool is_subset(const Ideal& a, const Ideal& b) {
  ReducedGB gb = buchberger(b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& g) { return normal_form(g, gb).is_zero(); });
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!a.ring().compatible(b.ring())) throw RingMismatch();
  const MonomialOrder& order = a.ring().order();
  return buchberger(a, order).basis() == buchberger(b, order).basis();
}

Ideal parse_ideal(std::string_view text, const RingSpec& ring) {
  // Split on the word "cap" outside parentheses.
  std::vector<std::pair<std::size_t, std::string_view>> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && text.substr(i, 3) == "cap" &&
        (i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]))) &&
        (i + 3 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 3])))) {
      parts.emplace_back(start, text.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  if (parts.empty()) return Ideal(ring, parse_poly_list(text, ring));
  parts.emplace_back(start, text.substr(start));
  std::vector<Ideal> ideals;
  for (auto [offset, piece] : parts) {
    std::size_t open = piece.find_first_not_of(" \t");
    std::size_t close = piece.find_last_not_of(" \t");
    if (open == std::string_view::npos || piece[open] != '(' || piece[close] != ')') {
      throw ParseError("intersection operands must be parenthesised lists", offset);
    }
    ideals.emplace_back(ring, parse_poly_list(piece.substr(open + 1, close - open - 1), ring));
  }
  return intersect(ideals);
}

}  // namespace chern

namespace chern {

std::vector<Polynomial> linear_basis(std::vector<Polynomial> polys) {
  if (polys.empty()) return polys;
  const RingSpec ring = polys.front().ring();
  const Field& k = ring.field();
  const MonomialOrder& order = ring.order();
  // Pivot rows keyed by leading monomial; each new row is reduced against the
  // pivots term by term, so the final rows have pairwise distinct leads.
  std::vector<Terms> rows;
  std::unordered_map<Monomial, std::size_t> pivots;
  auto find_pivot = [&](const Monomial& m) -> const Terms* {
    auto it = pivots.find(m);
    return it == pivots.end() ? nullptr : &rows[it->second];
  };
  for (auto& p : polys) {
    Terms cur = p.in_ring(ring).term_vector();
    Terms rest;
    std::size_t pos = 0;
    while (pos < cur.size()) {
      const Terms* piv = find_pivot(cur[pos].monomial);
      if (piv == nullptr) {
        rest.push_back(cur[pos]);
        ++pos;
        continue;
      }
      Terms tail(cur.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cur.end());
      Terms ptail(piv->begin() + 1, piv->end());
      cur = detail::add_scaled(tail, ptail, k.neg(cur[pos].coeff), Monomial(ring.width()), order, k);
      pos = 0;
    }
    if (rest.empty()) continue;
    detail::scale(rest, k.inv(rest.front().coeff), k);
    pivots.emplace(rest.front().monomial, rows.size());
    rows.push_back(std::move(rest));
  }
  std::vector<Polynomial> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(ring, std::move(r));
  return out;
}

Ideal product(const Ideal& a, const Ideal& b) {
  Ideal raw = a * b;
  return Ideal(raw.ring(), linear_basis(raw.generators()));
}

Ideal power(const Ideal& ideal, unsigned e) {
  if (e == 0) return Ideal::unit(ideal.ring());
  Ideal acc(ideal.ring(), linear_basis(ideal.generators()));
  for (unsigned i = 1; i < e; ++i) acc = product(acc, ideal);
  return acc;
}

}  // namespace chern
