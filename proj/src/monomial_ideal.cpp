#include "chernlab/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "chernlab/errors.hpp"
#include "chernlab/ideal_ops.hpp"

namespace chern {

namespace {

bool exps_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.width(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

std::string key_of(const std::vector<Monomial>& gens) {
  std::string key;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < g.width(); ++i) key += std::to_string(g[i]) + ",";
    key += ";";
  }
  return key;
}

// ---- irreducible decomposition -------------------------------------------

// Component a ⊆ component b.
bool component_subset(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.width(); ++i) {
    if (a[i] == 0) continue;
    if (b[i] == 0 || b[i] > a[i]) return false;
  }
  // The zero ideal (all-zero vector) is contained in everything.
  return true;
}

// Keeps the inclusion-minimal components. Irreducible monomial ideals are
// meet-prime in the distributive lattice of monomial ideals, so pairwise
// containment is exactly the redundancy test.
std::vector<Monomial> prune(std::vector<Monomial> comps) {
  std::sort(comps.begin(), comps.end(), exps_less);
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
      if (i != j && component_subset(comps[j], comps[i])) redundant = true;
    }
    if (!redundant) out.push_back(comps[i]);
  }
  return out;
}

class Splitter {
 public:
  std::vector<Monomial> run(const MonomialIdeal& ideal) {
    std::string key = key_of(ideal.generators());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Monomial> result;
    const Monomial* mixed = nullptr;
    for (const auto& g : ideal.generators()) {
      if (g.support_size() >= 2) {
        mixed = &g;
        break;
      }
    }
    const std::size_t n = ideal.width();
    if (mixed == nullptr) {
      Monomial exps(n);
      for (const auto& g : ideal.generators()) {
        for (std::size_t i = 0; i < n; ++i) {
          if (g[i]) exps.set(i, g[i]);
        }
      }
      result.push_back(exps);
    } else {
      std::size_t i = 0;
      while ((*mixed)[i] == 0) ++i;
      Monomial pure = Monomial::variable(n, i, (*mixed)[i]);
      Monomial rest = *mixed / pure;
      auto left = run(ideal + MonomialIdeal(n, {pure}));
      auto right = run(ideal + MonomialIdeal(n, {rest}));
      left.insert(left.end(), right.begin(), right.end());
      result = prune(std::move(left));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::unordered_map<std::string, std::vector<Monomial>> memo_;
};

std::vector<std::size_t> support_of(const Monomial& m) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i]) s.push_back(i);
  }
  return s;
}

}  // namespace

// ---- MonomialIdeal ---------------------------------------------------------

MonomialIdeal::MonomialIdeal(std::size_t width, std::vector<Monomial> generators) : width_(width) {
  std::sort(generators.begin(), generators.end(), exps_less);
  for (auto& g : generators) {
    if (g.width() != width_) throw Error("monomial width does not match ideal");
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  ReducedGB gb = buchberger(ideal);
  if (!gb.is_monomial()) throw Unsupported("non-monomial ideal");
  return MonomialIdeal(ideal.ring().width(), gb.leading_monomials());
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const noexcept {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(width_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Monomial> gens;
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) gens.push_back(a.lcm(b));
  }
  return MonomialIdeal(width_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> gens;
  for (const auto& g : gens_) gens.push_back(g / g.gcd(m));
  return MonomialIdeal(width_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& other) const {
  if (other.is_zero()) throw PreconditionError("colon by the zero ideal");
  MonomialIdeal acc = colon(other.gens_.front());
  for (std::size_t i = 1; i < other.gens_.size(); ++i) acc = acc.intersect(colon(other.gens_[i]));
  return acc;
}

Ideal MonomialIdeal::to_ideal(const RingSpec& ring) const {
  if (ring.width() != width_) throw RingMismatch();
  std::vector<Polynomial> polys;
  for (const auto& g : gens_) polys.push_back(Polynomial::monomial(ring, g));
  return Ideal(ring, std::move(polys));
}

MonomialIdeal IrreducibleComponent::ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < exponents.width(); ++i) {
    if (exponents[i]) gens.push_back(Monomial::variable(exponents.width(), i, exponents[i]));
  }
  return MonomialIdeal(exponents.width(), std::move(gens));
}

std::vector<std::size_t> IrreducibleComponent::support() const { return support_of(exponents); }

// ---- decompositions ----------------------------------------------------------

bool is_monomial_ideal(const Ideal& ideal) { return buchberger(ideal).is_monomial(); }

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw PreconditionError("unit ideal");
  std::vector<IrreducibleComponent> out;
  for (auto& m : Splitter().run(ideal)) out.push_back(IrreducibleComponent{std::move(m)});
  return out;
}

std::vector<IrreducibleComponent> irreducible_decomposition(const Ideal& ideal) {
  return irreducible_decomposition(MonomialIdeal::from_ideal(ideal));
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.width();
  std::map<std::vector<std::size_t>, MonomialIdeal> groups;
  for (const auto& c : irreducible_decomposition(ideal)) {
    auto support = c.support();
    auto it = groups.find(support);
    if (it == groups.end()) {
      groups.emplace(support, c.ideal());
    } else {
      it->second = it->second.intersect(c.ideal());
    }
  }
  std::vector<PrimaryComponent> out;
  for (auto& [support, q] : groups) {
    out.push_back(PrimaryComponent{q, MonomialPrime{support, n - support.size()}});
  }
  // Larger primes (smaller dimension) last; ties by variable list.
  std::sort(out.begin(), out.end(), [](const PrimaryComponent& a, const PrimaryComponent& b) {
    if (a.radical.dimension != b.radical.dimension) return a.radical.dimension > b.radical.dimension;
    return a.radical.variables < b.radical.variables;
  });
  return out;
}

std::vector<PrimaryComponent> primary_decomposition(const Ideal& ideal) {
  return primary_decomposition(MonomialIdeal::from_ideal(ideal));
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> out;
  for (auto& c : primary_decomposition(ideal)) out.push_back(std::move(c.radical));
  return out;
}

std::vector<MonomialPrime> associated_primes(const Ideal& ideal) {
  return associated_primes(MonomialIdeal::from_ideal(ideal));
}

FiltrationChain dimension_filtration(const Ideal& ideal) {
  const RingSpec& ring = ideal.ring();
  if (!is_monomial_ideal(ideal)) throw Unsupported("non-monomial filtration");
  MonomialIdeal base = MonomialIdeal::from_ideal(ideal);
  auto components = primary_decomposition(base);
  std::vector<std::size_t> dims;
  for (const auto& c : components) dims.push_back(c.radical.dimension);
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  FiltrationChain chain{base.to_ideal(ring), {}, dims};
  const std::size_t t = dims.size();
  std::vector<MonomialIdeal> levels{base};
  for (std::size_t i = 1; i < t; ++i) {
    MonomialIdeal k(ring.width(), {Monomial(ring.width())});
    for (const auto& c : components) {
      if (c.radical.dimension >= dims[i]) k = k.intersect(c.primary);
    }
    levels.push_back(std::move(k));
  }
  levels.push_back(MonomialIdeal(ring.width(), {Monomial(ring.width())}));

  for (std::size_t i = 1; i <= t; ++i) {
    if (levels[i] == levels[i - 1]) throw Error("dimension filtration is not strictly ascending");
    // dim K_i / J = dim S / (J : K_i).
    MonomialIdeal ann = base.colon(levels[i]);
    if (krull_dim(ann.to_ideal(ring)) != dims[i - 1]) {
      throw Error("dimension filtration level has the wrong dimension");
    }
  }
  for (const auto& k : levels) chain.levels.push_back(k.to_ideal(ring));
  return chain;
}

Ideal unmixed_component(const Ideal& ideal) {
  FiltrationChain chain = dimension_filtration(ideal);
  return chain.levels[chain.length() - 1];
}

}  // namespace chern
