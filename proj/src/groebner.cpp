#include "chernlab/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "chernlab/errors.hpp"

namespace chern {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingSpec ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (!g.ring().compatible(ring_)) throw RingMismatch();
    if (!g.is_zero()) generators_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(const RingSpec& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::maximal(const RingSpec& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring.width(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

bool Ideal::is_homogeneous() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::string Ideal::fingerprint() const {
  std::vector<std::string> parts;
  parts.reserve(generators_.size());
  for (const auto& g : generators_) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  std::string s = ring_.to_string() + "|";
  for (const auto& p : parts) s += p + ";";
  return s;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!ring_.compatible(other.ring_)) throw RingMismatch();
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::operator*(const Ideal& other) const {
  if (!ring_.compatible(other.ring_)) throw RingMismatch();
  std::vector<Polynomial> gens;
  for (const auto& a : generators_) {
    for (const auto& b : other.generators_) gens.push_back(a * b);
  }
  return Ideal(ring_, std::move(gens));
}

// ---------------------------------------------------------------------------
// ReducedGB

ReducedGB::ReducedGB(RingSpec ring, std::vector<Polynomial> basis, std::string source)
    : ring_(std::move(ring)), basis_(std::move(basis)), source_(std::move(source)) {
  leads_.reserve(basis_.size());
  for (const auto& g : basis_) leads_.push_back(g.leading().monomial);
}

bool ReducedGB::is_unit_ideal() const noexcept {
  return basis_.size() == 1 && basis_.front().is_constant();
}

bool ReducedGB::is_monomial() const noexcept {
  return std::all_of(basis_.begin(), basis_.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

bool ReducedGB::contains(const Polynomial& f) const { return normal_form(f, *this).is_zero(); }

// ---------------------------------------------------------------------------
// Engine

namespace {

std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i]) mask |= std::uint64_t{1} << (i % 64);
  }
  return mask;
}

struct Element {
  Terms poly;  // monic, sorted by the engine order
  Monomial lead;
  std::uint64_t mask;
  bool active = true;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(const RingSpec& ring, const GroebnerOptions& options)
      : ring_(ring), order_(ring.order()), field_(ring.field()), options_(options) {}

  void run(std::vector<Terms> inputs) {
    homogeneous_ = std::all_of(inputs.begin(), inputs.end(), [](const Terms& t) {
      return std::all_of(t.begin(), t.end(), [&](const Term& x) {
        return x.monomial.degree() == t.front().monomial.degree();
      });
    });
    std::sort(inputs.begin(), inputs.end(), [&](const Terms& a, const Terms& b) {
      if (a.front().monomial.degree() != b.front().monomial.degree()) {
        return a.front().monomial.degree() < b.front().monomial.degree();
      }
      return order_.compare(a.front().monomial, b.front().monomial) < 0;
    });
    for (auto& f : inputs) {
      if (unit_) return;
      Terms h = reduce(std::move(f), true);
      if (!h.empty()) insert(std::move(h));
    }
    std::size_t processed = 0;
    unsigned current_degree = 0;
    while (!pairs_.empty() && !unit_) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();

      if (homogeneous_ && p.lcm.degree() > current_degree) {
        if (current_degree > 0 && all_monomials_lead(p.lcm.degree() - 1)) {
          pairs_.clear();
          break;
        }
        current_degree = p.lcm.degree();
      }
      if (++processed > options_.max_pairs) {
        throw ResourceLimit("S-pair cap of " + std::to_string(options_.max_pairs) + " exceeded");
      }
      Terms h = reduce(spoly(p), true);
      if (!h.empty()) insert(std::move(h));
    }
  }

  std::vector<Polynomial> reduced_basis() {
    std::vector<Polynomial> out;
    if (unit_) {
      out.push_back(Polynomial::constant(ring_, 1));
      return out;
    }
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (elems_[k].active) live.push_back(k);
    }
    for (std::size_t k : live) {
      const Element& e = elems_[k];
      Terms tail(e.poly.begin() + 1, e.poly.end());
      Terms reduced = reduce(std::move(tail), true);
      Terms full;
      full.reserve(reduced.size() + 1);
      full.push_back(e.poly.front());
      for (auto& t : reduced) full.push_back(std::move(t));
      out.emplace_back(ring_, std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading().monomial, b.leading().monomial) < 0;
    });
    return out;
  }

  /// Full or head-only reduction of f by the active elements.
  Terms reduce(Terms f, bool full) const {
    Terms rest;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Term& t = f[pos];
      const Element* g = find_divisor(t.monomial);
      if (g == nullptr) {
        if (!full) {
          rest.insert(rest.end(), std::make_move_iterator(f.begin() + pos),
                      std::make_move_iterator(f.end()));
          break;
        }
        rest.push_back(std::move(f[pos]));
        ++pos;
        continue;
      }
      Monomial q = t.monomial / g->lead;
      FieldElement c = field_.neg(t.coeff);
      f = merge_tail(std::span<const Term>(f).subspan(pos + 1), g->poly, c, q);
      pos = 0;
    }
    return rest;
  }

 private:
  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    return order_.compare(a.lcm, b.lcm) < 0;
  }

  const Element* find_divisor(const Monomial& m) const {
    std::uint64_t mask = support_mask(m);
    for (const auto& e : elems_) {
      if (!e.active || (e.mask & ~mask) != 0) continue;
      if (e.lead.divides(m)) return &e;
    }
    return nullptr;
  }

  // a + c * q * (g without its head); g is monic so the heads cancel.
  Terms merge_tail(std::span<const Term> a, const Terms& g, const FieldElement& c,
                   const Monomial& q) const {
    Terms out;
    out.reserve(a.size() + g.size());
    std::size_t i = 0, j = 1;
    while (i < a.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Monomial gm = g[j].monomial * q;
      int cmp = i == a.size() ? -1 : order_.compare(a[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back(Term{std::move(gm), field_.mul(c, g[j].coeff)});
        ++j;
      } else {
        FieldElement s = field_.add(a[i].coeff, field_.mul(c, g[j].coeff));
        if (!field_.is_zero(s)) out.push_back(Term{std::move(gm), std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Terms spoly(const Pair& p) const {
    const Element& a = elems_[p.i];
    const Element& b = elems_[p.j];
    Monomial qa = p.lcm / a.lead;
    Monomial qb = p.lcm / b.lead;
    Terms ta;
    ta.reserve(a.poly.size());
    for (std::size_t k = 1; k < a.poly.size(); ++k) {
      ta.push_back(Term{a.poly[k].monomial * qa, a.poly[k].coeff});
    }
    return merge_tail(ta, b.poly, field_.from_integer(-1), qb);
  }

  void insert(Terms h) {
    if (!field_.is_one(h.front().coeff)) detail::scale(h, field_.inv(h.front().coeff), field_);
    if (h.front().monomial.is_one()) {
      unit_ = true;
      pairs_.clear();
      return;
    }
    const std::size_t k = elems_.size();
    Monomial lead = h.front().monomial;
    std::uint64_t mask = support_mask(lead);
    elems_.push_back(Element{std::move(h), lead, mask, true});

    // Gebauer–Möller update.
    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < k; ++i) {
      if (elems_[i].active) candidates.push_back(Pair{i, k, elems_[i].lead.lcm(lead)});
    }
    std::vector<Pair> kept;
    std::vector<bool> gone(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = elems_[p.i].lead.coprime(lead);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
          if (b == a || gone[b]) continue;
          dominated = candidates[b].lcm.divides(p.lcm);
        }
      }
      if (dominated) {
        gone[a] = true;
      } else {
        kept.push_back(p);
      }
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lead.divides(p.lcm)) return false;
      Monomial li = elems_[p.i].lead.lcm(lead);
      Monomial lj = elems_[p.j].lead.lcm(lead);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (auto& p : kept) {
      if (!elems_[p.i].lead.coprime(lead)) pairs_.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (elems_[i].active && lead.divides(elems_[i].lead)) elems_[i].active = false;
    }
  }

  // True when every monomial of degree d is divisible by an active lead.
  bool all_monomials_lead(unsigned d) const {
    const std::size_t n = ring_.width();
    for (std::size_t i = 0; i < n; ++i) {
      if (!find_divisor(Monomial::variable(n, i, d))) return false;
    }
    Monomial m(n);
    return enumerate_covered(m, 0, d);
  }

  bool enumerate_covered(Monomial& m, std::size_t var, unsigned remaining) const {
    const std::size_t n = ring_.width();
    if (var + 1 == n) {
      m.set(var, remaining);
      bool ok = find_divisor(m) != nullptr;
      m.set(var, 0);
      return ok;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      m.set(var, e);
      if (!enumerate_covered(m, var + 1, remaining - e)) {
        m.set(var, 0);
        return false;
      }
    }
    m.set(var, 0);
    return true;
  }

  RingSpec ring_;
  const MonomialOrder& order_;
  const Field& field_;
  GroebnerOptions options_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  bool homogeneous_ = false;
  bool unit_ = false;
};

// Process-wide memo table; single writer, many readers.
class GbCache {
 public:
  std::optional<ReducedGB> find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, const ReducedGB& gb) {
    std::size_t weight = 1;
    for (const auto& g : gb.basis()) weight += g.size();
    if (weight > kMaxWeight / 4) return;
    std::unique_lock lock(mutex_);
    if (weight_ + weight > kMaxWeight || map_.size() >= kMaxEntries) {
      map_.clear();
      weight_ = 0;
    }
    if (map_.emplace(key, gb).second) weight_ += weight;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
    weight_ = 0;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  static constexpr std::size_t kMaxWeight = 2'000'000;
  static constexpr std::size_t kMaxEntries = 4096;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, ReducedGB> map_;
  std::size_t weight_ = 0;
};

GbCache& cache() {
  static GbCache instance;
  return instance;
}

}  // namespace

ReducedGB buchberger(const Ideal& ideal, const MonomialOrder& order,
                     const GroebnerOptions& options) {
  RingSpec ring = ideal.ring().with_order(order);
  std::string source = ideal.fingerprint();
  std::string key = order.name() + "#" + source;
  if (auto hit = cache().find(key)) return *hit;

  std::vector<Terms> inputs;
  inputs.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) inputs.push_back(g.in_ring(ring).term_vector());

  Engine engine(ring, options);
  engine.run(std::move(inputs));
  ReducedGB gb(ring, engine.reduced_basis(), std::move(source));
  cache().store(key, gb);
  return gb;
}

Polynomial normal_form(const Polynomial& f, const ReducedGB& gb) {
  if (!f.ring().compatible(gb.ring())) throw RingMismatch();
  const RingSpec& ring = gb.ring();
  const Field& field = ring.field();
  const MonomialOrder& order = ring.order();
  Terms cur = f.in_ring(ring).term_vector();
  Terms rest;
  const auto& basis = gb.basis();
  const auto& leads = gb.leading_monomials();
  std::vector<std::uint64_t> masks;
  masks.reserve(leads.size());
  for (const auto& m : leads) masks.push_back(support_mask(m));
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term& t = cur[pos];
    std::uint64_t mask = support_mask(t.monomial);
    std::size_t k = 0;
    for (; k < leads.size(); ++k) {
      if ((masks[k] & ~mask) == 0 && leads[k].divides(t.monomial)) break;
    }
    if (k == leads.size()) {
      rest.push_back(std::move(cur[pos]));
      ++pos;
      continue;
    }
    Monomial q = t.monomial / leads[k];
    FieldElement c = field.neg(t.coeff);
    Terms tail(cur.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cur.end());
    const Terms& g = basis[k].term_vector();
    Terms gt(g.begin() + 1, g.end());
    cur = detail::add_scaled(tail, gt, c, q, order, field);
    pos = 0;
  }
  return Polynomial(ring, std::move(rest)).in_ring(f.ring());
}

void clear_groebner_cache() { cache().clear(); }
std::size_t groebner_cache_size() { return cache().size(); }

}  // namespace chern
