#include <gtest/gtest.h>

#include <random>

#include "chernlab/errors.hpp"
#include "chernlab/polynomial.hpp"
#include "oracles.hpp"

using namespace chern;

namespace {

Polynomial random_poly(const RingSpec& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> deg(0, 3);
  Polynomial f(ring);
  for (int k = 0; k < 3; ++k) f = f + oracle::random_form(ring, deg(rng), rng, 0.4);
  return f;
}

Monomial random_monomial(std::size_t width, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> e(0, 4);
  Monomial m(width);
  for (std::size_t i = 0; i < width; ++i) m.set(i, e(rng));
  return m;
}

}  // namespace

TEST(Ring, Parse) {
  RingSpec r = parse_ring("Q[x,y,z] grevlex");
  EXPECT_TRUE(r.field().is_rational());
  EXPECT_EQ(r.variables(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(r.order(), MonomialOrder::grevlex());
}

TEST(Ring, ParsePrimeFieldAndLex) {
  RingSpec r = parse_ring("F32003[x1,x2,x3,y] lex");
  EXPECT_EQ(r.field().characteristic(), 32003u);
  EXPECT_EQ(r.width(), 4u);
  EXPECT_EQ(r.order(), MonomialOrder::lex());
  EXPECT_EQ(parse_ring(r.to_string()), r);
}

TEST(Ring, ParseErrors) {
  EXPECT_THROW(parse_ring("F4[x]"), PreconditionError);
  EXPECT_THROW(parse_ring("Q[x,x]"), Error);
  EXPECT_THROW(parse_ring("Q[x"), ParseError);
  EXPECT_THROW(parse_ring("R[x]"), ParseError);
}

TEST(Polynomial, ParseExamples) {
  RingSpec r = parse_ring("Q[x,y,z]");
  EXPECT_EQ(parse_poly("x^2*y - 3*z + 1/2", r).to_string(), "x^2*y - 3*z + 1/2");
  EXPECT_EQ(parse_poly("(x+y)^2", r), parse_poly("x^2 + 2*x*y + y^2", r));
  EXPECT_TRUE(parse_poly("x - x", r).is_zero());
  EXPECT_THROW(parse_poly("x + w", r), ParseError);
  EXPECT_THROW(parse_poly("x^-1", r), ParseError);
  EXPECT_THROW(parse_poly("x / y", r), ParseError);
}

TEST(Polynomial, ParseErrorPosition) {
  RingSpec r = parse_ring("Q[x,y]");
  try {
    parse_poly("x + w", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Polynomial, LeadingTerm) {
  RingSpec q = parse_ring("Q[x,y,z]");
  EXPECT_EQ(leading_term(parse_poly("x^2*y + z", q), MonomialOrder::grevlex()).monomial, (Monomial{2, 1, 0}));
  EXPECT_EQ(leading_term(parse_poly("x + y^2", q), MonomialOrder::lex()).monomial, (Monomial{1, 0, 0}));
  EXPECT_EQ(leading_term(parse_poly("x + y^2", q), MonomialOrder::grevlex()).monomial, (Monomial{0, 2, 0}));
  EXPECT_THROW(leading_term(Polynomial(q), MonomialOrder::grevlex()), PreconditionError);
}

TEST(Polynomial, FiniteFieldArithmetic) {
  RingSpec r = parse_ring("F2[x,y]");
  EXPECT_EQ(parse_poly("(x+y)^2", r), parse_poly("x^2 + y^2", r));
  EXPECT_TRUE(parse_poly("x + x", r).is_zero());
  RingSpec p = parse_ring("F7[x]");
  EXPECT_EQ(parse_poly("1/3*x", p), parse_poly("5*x", p));
}

TEST(Polynomial, RingMismatch) {
  RingSpec a = parse_ring("Q[x,y]");
  RingSpec b = parse_ring("Q[y,x]");
  EXPECT_THROW(parse_poly("x", a) + parse_poly("x", b), RingMismatch);
}

TEST(Polynomial, ArithmeticLaws) {
  std::mt19937_64 rng(11);
  for (const char* spec : {"Q[x,y,z]", "F32003[x,y,z]", "F2[x,y,z] lex"}) {
    RingSpec r = parse_ring(spec);
    for (int trial = 0; trial < 60; ++trial) {
      Polynomial f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
      EXPECT_EQ(f + g, g + f);
      EXPECT_EQ(f * g, g * f);
      EXPECT_EQ((f + g) + h, f + (g + h));
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_TRUE((f - f).is_zero());
    }
  }
}

TEST(Polynomial, PrintParseRoundTrip) {
  std::mt19937_64 rng(5);
  for (const char* spec : {"Q[x,y,z]", "F32003[a,b,c] lex"}) {
    RingSpec r = parse_ring(spec);
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial f = random_poly(r, rng);
      EXPECT_EQ(parse_poly(f.to_string(), r), f) << f.to_string();
    }
  }
}

TEST(MonomialOrder, Axioms) {
  std::mt19937_64 rng(3);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(2)}) {
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a = random_monomial(4, rng), b = random_monomial(4, rng), c = random_monomial(4, rng);
      EXPECT_LE(order.compare(Monomial(4), a), 0);
      EXPECT_EQ(order.compare(a, b), -order.compare(b, a));
      if (order.compare(a, b) <= 0) EXPECT_LE(order.compare(a * c, b * c), 0);
      if (order.less(a, b) && order.less(b, c)) EXPECT_TRUE(order.less(a, c));
    }
  }
}

TEST(Monomial, Operations) {
  Monomial a{2, 1, 0}, b{1, 3, 1};
  EXPECT_EQ(a.lcm(b), (Monomial{2, 3, 1}));
  EXPECT_EQ(a.gcd(b), (Monomial{1, 1, 0}));
  EXPECT_TRUE(Monomial({1, 1, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(b.support_size(), 3u);
}
