#include "chernlab/polynomial.hpp"

#include <algorithm>

#include "chernlab/errors.hpp"

namespace chern {

namespace detail {

void canonicalize(Terms& terms, const MonomialOrder& order, const Field& field) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].monomial == acc.monomial) {
      acc.coeff = field.add(acc.coeff, terms[j].coeff);
      ++j;
    }
    if (!field.is_zero(acc.coeff)) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

Terms add_scaled(const Terms& f, const Terms& g, const FieldElement& c, const Monomial& m,
                 const MonomialOrder& order, const Field& field) {
  Terms out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    int cmp = i == f.size() ? -1 : order.compare(f[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), field.mul(c, g[j].coeff)});
      ++j;
    } else {
      FieldElement s = field.add(f[i].coeff, field.mul(c, g[j].coeff));
      if (!field.is_zero(s)) out.push_back(Term{std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Terms multiply(const Terms& f, const Terms& g, const MonomialOrder& order, const Field& field) {
  Terms out;
  out.reserve(f.size() * g.size());
  for (const auto& a : f) {
    for (const auto& b : g) {
      out.push_back(Term{a.monomial * b.monomial, field.mul(a.coeff, b.coeff)});
    }
  }
  canonicalize(out, order, field);
  return out;
}

void scale(Terms& f, const FieldElement& c, const Field& field) {
  for (auto& t : f) t.coeff = field.mul(t.coeff, c);
}

}  // namespace detail

namespace {

void require_compatible(const Polynomial& f, const Polynomial& g) {
  if (!f.ring().compatible(g.ring())) throw RingMismatch();
}

}  // namespace

Polynomial::Polynomial(RingSpec ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.monomial.width() != ring_.width()) throw Error("monomial width does not match ring");
  }
  detail::canonicalize(terms_, ring_.order(), ring_.field());
}

Polynomial Polynomial::constant(const RingSpec& ring, const FieldElement& c) {
  Polynomial p(ring);
  if (!ring.field().is_zero(c)) p.terms_.push_back(Term{Monomial(ring.width()), c});
  return p;
}

Polynomial Polynomial::constant(const RingSpec& ring, long long c) {
  return constant(ring, ring.field().from_integer(c));
}

Polynomial Polynomial::variable(const RingSpec& ring, std::size_t index) {
  return monomial(ring, Monomial::variable(ring.width(), index));
}

Polynomial Polynomial::monomial(const RingSpec& ring, const Monomial& m) {
  Polynomial p(ring);
  p.terms_.push_back(Term{m, ring.field().one()});
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

unsigned Polynomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::operator-() const { return scaled(ring_.field().from_integer(-1)); }

Polynomial Polynomial::scaled(const FieldElement& c) const {
  if (ring_.field().is_zero(c)) return Polynomial(ring_);
  Polynomial r(*this);
  detail::scale(r.terms_, c, ring_.field());
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const FieldElement& c) const {
  if (ring_.field().is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    r.terms_.push_back(Term{t.monomial * m, ring_.field().mul(t.coeff, c)});
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || ring_.field().is_one(terms_.front().coeff)) return *this;
  return scaled(ring_.field().inv(terms_.front().coeff));
}

Polynomial Polynomial::in_ring(const RingSpec& ring) const {
  if (!ring_.compatible(ring)) throw RingMismatch();
  if (ring_.order() == ring.order()) {
    Polynomial r(*this);
    r.ring_ = ring;
    return r;
  }
  return Polynomial(ring, terms_);
}

std::string monomial_to_string(const Monomial& m, const RingSpec& ring) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variables()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = ring_.field();
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    bool negative = k.sign(t.coeff) < 0;
    FieldElement mag = negative ? k.neg(t.coeff) : t.coeff;
    if (i == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      s += k.to_string(mag);
    } else if (k.is_one(mag)) {
      s += monomial_to_string(t.monomial, ring_);
    } else {
      s += k.to_string(mag) + "*" + monomial_to_string(t.monomial, ring_);
    }
  }
  return s;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  const RingSpec& r = f.ring();
  Polynomial gg = g.in_ring(r);
  return Polynomial(r, detail::add_scaled(f.term_vector(), gg.term_vector(), r.field().one(),
                                          Monomial(r.width()), r.order(), r.field()));
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  const RingSpec& r = f.ring();
  Polynomial gg = g.in_ring(r);
  return Polynomial(r, detail::add_scaled(f.term_vector(), gg.term_vector(),
                                          r.field().from_integer(-1), Monomial(r.width()),
                                          r.order(), r.field()));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  const RingSpec& r = f.ring();
  Polynomial gg = g.in_ring(r);
  return Polynomial(r, detail::multiply(f.term_vector(), gg.term_vector(), r.order(), r.field()));
}

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw PreconditionError("zero polynomial has no leading term");
  const Term* best = &f.terms()[0];
  for (const auto& t : f.terms()) {
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

Polynomial map_variables(const Polynomial& f, const RingSpec& target,
                         std::span<const std::size_t> index_map) {
  if (!(f.ring().field() == target.field())) throw RingMismatch();
  Terms out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target.width());
    for (std::size_t i = 0; i < t.monomial.width(); ++i) {
      if (t.monomial[i]) m.set(index_map[i], m[index_map[i]] + t.monomial[i]);
    }
    out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

}  // namespace chern
