#include "chernlab/monomial.hpp"

#include <limits>

#include "chernlab/errors.hpp"

namespace chern {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

Monomial::Exponent checked(unsigned e) {
  if (e > kMaxExponent) throw Error("exponent overflow");
  return static_cast<Monomial::Exponent>(e);
}

// Grevlex on the index range [lo, hi): higher degree wins, then the smaller
// exponent at the last differing position wins.
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  for (unsigned e : exps) {
    exps_.push_back(checked(e));
    degree_ += e;
  }
}

Monomial::Monomial(std::span<const unsigned> exps) {
  for (unsigned e : exps) {
    exps_.push_back(checked(e));
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t width, std::size_t index, unsigned power) {
  Monomial m(width);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = checked(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::support_size() const noexcept {
  std::size_t n = 0;
  for (auto e : exps_) n += e != 0;
  return n;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = checked(unsigned{exps_[i]} + other.exps_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.width();
  switch (kind_) {
    case Kind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::Elimination: {
      std::size_t k = std::min(block_, n);
      if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return 0;
}

}  // namespace chern
