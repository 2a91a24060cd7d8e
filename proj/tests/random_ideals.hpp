#pragma once

#include <random>
#include <vector>

#include "chernlab/groebner.hpp"
#include "chernlab/monomial_ideal.hpp"
#include "oracles.hpp"

namespace sample {

using namespace chern;

inline Ideal homogeneous_ideal(const RingSpec& r, std::mt19937_64& rng, unsigned max_degree = 3) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<unsigned> deg(1, max_degree);
  std::vector<Polynomial> gens;
  const int k = count(rng);
  while (static_cast<int>(gens.size()) < k) {
    Polynomial f = oracle::random_form(r, deg(rng), rng, 0.5);
    if (!f.is_zero()) gens.push_back(f);
  }
  return Ideal(r, gens);
}

inline Monomial monomial(std::size_t width, unsigned max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> deg(1, max_degree);
  auto all = oracle::monomials_of_degree(width, deg(rng));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

/// Zero-dimensional ideals: a pure power of every variable plus random
/// monomials or homogeneous binomials.
inline Ideal artinian(const RingSpec& r, std::mt19937_64& rng, bool binomial) {
  std::uniform_int_distribution<unsigned> pow(1, 4);
  std::uniform_int_distribution<int> extra(0, 3);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < r.width(); ++i) {
    gens.push_back(Polynomial::monomial(r, Monomial::variable(r.width(), i, pow(rng))));
  }
  const int k = extra(rng);
  for (int j = 0; j < k; ++j) {
    Monomial a = monomial(r.width(), 4, rng);
    if (!binomial) {
      gens.push_back(Polynomial::monomial(r, a));
      continue;
    }
    auto same = oracle::monomials_of_degree(r.width(), a.degree());
    std::uniform_int_distribution<std::size_t> pick(0, same.size() - 1);
    gens.push_back(Polynomial::monomial(r, a) - Polynomial::monomial(r, same[pick(rng)]));
  }
  return Ideal(r, gens);
}

/// m-primary monomial ideal: pure powers plus a few random monomials.
inline MonomialIdeal m_primary(std::size_t width, std::mt19937_64& rng, unsigned max_degree = 4) {
  std::uniform_int_distribution<unsigned> pow(1, max_degree);
  std::uniform_int_distribution<int> extra(0, 4);
  std::uniform_int_distribution<unsigned> deg(2, max_degree);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < width; ++i) gens.push_back(Monomial::variable(width, i, pow(rng)));
  const int k = extra(rng);
  for (int j = 0; j < k; ++j) {
    auto all = oracle::monomials_of_degree(width, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    gens.push_back(all[pick(rng)]);
  }
  return MonomialIdeal(width, gens);
}

}  // namespace sample
