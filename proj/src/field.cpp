#include "chernlab/field.hpp"

#include "chernlab/errors.hpp"

namespace chern {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw PreconditionError("characteristic " + std::to_string(p) +
                            " is not a prime below 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

FieldElement Field::zero() const { return p_ ? FieldElement(0u) : FieldElement(mpq_class(0)); }
FieldElement Field::one() const { return p_ ? FieldElement(1u) : FieldElement(mpq_class(1)); }

FieldElement Field::from_integer(long long n) const {
  if (p_ == 0) return FieldElement(mpq_class(static_cast<long>(n)));
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return FieldElement(static_cast<std::uint32_t>(r));
}

FieldElement Field::from_integer(const mpz_class& n) const {
  if (p_ == 0) return FieldElement(mpq_class(n));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
  return FieldElement(static_cast<std::uint32_t>(r.get_ui()));
}

FieldElement Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return FieldElement(q);
  FieldElement den = from_integer(q.get_den());
  if (den.residue() == 0) {
    throw PreconditionError("denominator divisible by the characteristic " + std::to_string(p_));
  }
  return div(from_integer(q.get_num()), den);
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw PreconditionError("division by zero");
  if (p_ == 0) return FieldElement(mpq_class(1 / a.rational()));
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.residue();
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return FieldElement(static_cast<std::uint32_t>(t));
}

std::string Field::to_string(const FieldElement& a) const {
  if (p_ == 0) return a.rational().get_str();
  std::uint32_t v = a.residue();
  if (v > p_ / 2) return "-" + std::to_string(p_ - v);
  return std::to_string(v);
}

int Field::sign(const FieldElement& a) const {
  if (p_ == 0) return sgn(a.rational()) < 0 ? -1 : 1;
  return a.residue() > p_ / 2 ? -1 : 1;
}

}  // namespace chern
