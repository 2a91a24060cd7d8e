#include <gtest/gtest.h>

#include "chernlab/errors.hpp"
#include "chernlab/ideal_ops.hpp"
#include "chernlab/monomial_ideal.hpp"
#include "chernlab/sop.hpp"

using namespace chern;

namespace {

std::vector<Polynomial> polys(const RingSpec& r, const char* text) { return parse_poly_list(text, r); }

RingSpec example1_ring() { return parse_ring("F32003[x1,x2,x3,y]"); }
QuotientModule example1() {
  RingSpec r = example1_ring();
  return QuotientModule(parse_ideal("(x1,x2,x3) cap (y)", r));
}

}  // namespace

TEST(VerifySop, Examples) {
  RingSpec r = parse_ring("Q[x,y]");
  QuotientModule s = QuotientModule::free(r);
  SopCertificate ok = verify_sop(s, polys(r, "x, y"));
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.dims, (std::vector<std::size_t>{2, 1, 0}));
  SopCertificate bad = verify_sop(s, polys(r, "x, x"));
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.failed_at, 2u);
  EXPECT_THROW(verify_sop(s, polys(r, "x")), PreconditionError);
  EXPECT_THROW(verify_sop(s, polys(r, "x, y - 1")), Unsupported);

  QuotientModule e1 = example1();
  EXPECT_TRUE(verify_sop(e1, polys(e1.ring(), "x1 - y, x2, x3")).valid);
}

TEST(SampleSop, Deterministic) {
  RingSpec r = parse_ring("Q[x,y,z]");
  QuotientModule s = QuotientModule::free(r);
  auto a = sample_sop(s, 3, 42);
  auto b = sample_sop(s, 3, 42);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].elements, b[k].elements);
    EXPECT_TRUE(a[k].certificate.valid);
    EXPECT_TRUE(verify_sop(s, a[k].elements).valid);
    for (const auto& f : a[k].elements) {
      EXPECT_TRUE(f.is_homogeneous());
      EXPECT_EQ(f.degree(), 1u);
    }
  }
  EXPECT_NE(sample_sop(s, 1, 43)[0].elements, a[0].elements);
}

TEST(SampleSop, Quadrics) {
  RingSpec r = parse_ring("F32003[x,y,z]");
  auto sys = sample_sop(QuotientModule::free(r), 2, 7, SamplingOptions{2});
  for (const auto& s : sys) {
    ASSERT_EQ(s.elements.size(), 3u);
    EXPECT_EQ(s.degrees, (std::vector<unsigned>{2, 2, 2}));
    EXPECT_TRUE(s.certificate.valid);
  }
}

TEST(SampleSop, Errors) {
  RingSpec r = parse_ring("Q[x,y]");
  EXPECT_THROW(sample_sop(QuotientModule(parse_ideal("x, y", r)), 1, 1), PreconditionError);
  EXPECT_THROW(sample_sop(QuotientModule::free(r), 1, 1, SamplingOptions{0}), PreconditionError);
}

TEST(SampleSop, RetryCap) {
  // Over F2 every draw is the all-ones form, so no two-element system is valid.
  RingSpec f2 = parse_ring("F2[x,y]");
  EXPECT_THROW(sample_sop(QuotientModule::free(f2), 1, 1), ResourceLimit);
}

TEST(DSequence, Examples) {
  RingSpec r = parse_ring("Q[x,y]");
  EXPECT_TRUE(is_d_sequence(QuotientModule::free(r), polys(r, "x, y")).holds);

  // In Q[x,y]/(xy): (xy, x+y) : x = (x, y) but (xy, x+y) : x^2 = (1).
  QuotientModule m(parse_ideal("x*y", r));
  DSequenceResult res = is_d_sequence(m, polys(r, "x + y, x"));
  EXPECT_FALSE(res.holds);
  ASSERT_TRUE(res.failure.has_value());
  EXPECT_EQ(*res.failure, std::make_pair(std::size_t{1}, std::size_t{2}));
  EXPECT_TRUE(same_ideal(colon(parse_ideal("x*y, x + y", r), parse_poly("x", r)), parse_ideal("x, y", r)));
  EXPECT_TRUE(buchberger(colon(parse_ideal("x*y, x + y", r), parse_poly("x^2", r))).is_unit_ideal());

  RingSpec r3 = parse_ring("F32003[x,y,z]");
  QuotientModule e2(parse_ideal("x^3, x^2*y, x^2*z, z^2", r3));
  EXPECT_TRUE(is_d_sequence(e2, polys(r3, "3*x + y - 2*z")).holds);
}

TEST(Distinguished, Examples) {
  QuotientModule e1 = example1();
  const RingSpec& r = e1.ring();
  EXPECT_TRUE(is_distinguished(e1, polys(r, "x1 - y, x2, x3")));
  EXPECT_FALSE(is_distinguished(e1, polys(r, "x2, x3, y + x1")));
  RingSpec q = parse_ring("Q[x,y,z]");
  EXPECT_TRUE(is_distinguished(QuotientModule::free(q), polys(q, "x + y, y - z, z")));
  EXPECT_THROW(is_distinguished(QuotientModule(parse_ideal("x^2 + y^2", q)), polys(q, "x, z")), Unsupported);
}

TEST(Distinguished, SamplerProducesDistinguishedSystems) {
  QuotientModule e1 = example1();
  for (unsigned degree : {1u, 2u}) {
    for (const auto& sys : sample_distinguished_sop(e1, 3, 5, SamplingOptions{degree})) {
      EXPECT_TRUE(sys.certificate.valid);
      EXPECT_TRUE(is_distinguished(e1, sys.elements));
    }
  }
  RingSpec r = parse_ring("Q[x,y,z]");
  QuotientModule free = QuotientModule::free(r);
  auto plain = sample_sop(free, 2, 9);
  auto dist = sample_distinguished_sop(free, 2, 9);
  for (std::size_t k = 0; k < plain.size(); ++k) EXPECT_EQ(plain[k].elements, dist[k].elements);
}

TEST(GPredicate, Examples) {
  RingSpec r = parse_ring("Q[x,y,z]");
  GPredicate regular = g_predicate(QuotientModule::free(r), polys(r, "x, y, z"));
  EXPECT_EQ(regular.verdict, Verdict::True);
  EXPECT_EQ(regular.ass_unchecked, 0u);

  QuotientModule e1 = example1();
  GPredicate non = g_predicate(e1, polys(e1.ring(), "x2, x3, y + x1"));
  EXPECT_EQ(non.verdict, Verdict::False);
  ASSERT_TRUE(non.distinguished.has_value());
  EXPECT_FALSE(*non.distinguished);

  GPredicate dist = g_predicate(e1, polys(e1.ring(), "x1 - y, x2, x3"));
  EXPECT_NE(dist.verdict, Verdict::False);
  EXPECT_TRUE(*dist.distinguished);
  EXPECT_TRUE(*dist.d_sequence);

  GPredicate generic = g_predicate(QuotientModule(parse_ideal("x^2 + y^2", r)), polys(r, "x, z"));
  EXPECT_EQ(generic.verdict, Verdict::Partial);
  EXPECT_FALSE(generic.distinguished.has_value());
}

TEST(CmTest, Examples) {
  RingSpec r = parse_ring("Q[x,y,z]");
  EXPECT_TRUE(cm_test(QuotientModule::free(r), 2, 3).cohen_macaulay);
  RingSpec f = parse_ring("F32003[x,y,z]");
  CmVerdict e2 = cm_test(QuotientModule(parse_ideal("x^3, x^2*y, x^2*z, z^2", f)), 2, 3);
  EXPECT_FALSE(e2.cohen_macaulay);
  EXPECT_EQ(e2.witness, "h0m");
  EXPECT_EQ(e2.h0m_length, 1u);
  EXPECT_THROW(cm_test(QuotientModule(parse_ideal("x, y, z", r)), 1, 1), PreconditionError);
}

TEST(TheoremReport, CohenMacaulayLinear) {
  RingSpec r = parse_ring("Q[x,y,z]");
  TheoremReport rep = theorem_report(QuotientModule::free(r), 3, 1, 1);
  EXPECT_TRUE(rep.cm.cohen_macaulay);
  ASSERT_EQ(rep.samples.size(), 3u);
  EXPECT_EQ(rep.ir_le_f0, Check::Holds);
  for (const auto& s : rep.samples) {
    EXPECT_EQ(s.ir, 1u);
    EXPECT_EQ(s.f0, 1);
    EXPECT_EQ(static_cast<std::int64_t>(s.colength), *s.e0);
  }
  EXPECT_EQ(rep.max_ir, 1u);
}

TEST(TheoremReport, Deterministic) {
  RingSpec r = parse_ring("F32003[x,y]");
  QuotientModule m(parse_ideal("x^2*y, x*y^2", r));
  TheoremReport a = theorem_report(m, 2, 17, 1);
  TheoremReport b = theorem_report(m, 2, 17, 1);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    EXPECT_EQ(a.samples[k].system.elements, b.samples[k].system.elements);
    EXPECT_EQ(a.samples[k].ir, b.samples[k].ir);
    EXPECT_EQ(a.samples[k].f0, b.samples[k].f0);
  }
  EXPECT_EQ(a.max_ir, b.max_ir);
}

TEST(TheoremReport, Example2) {
  RingSpec r = parse_ring("F32003[x,y,z]");
  TheoremReport rep = theorem_report(QuotientModule(parse_ideal("x^3, x^2*y, x^2*z, z^2", r)), 4, 2, 1);
  EXPECT_FALSE(rep.cm.cohen_macaulay);
  for (const auto& s : rep.samples) {
    EXPECT_EQ(s.ir, 2u);
    EXPECT_EQ(s.f0, 2);
  }
  EXPECT_EQ(rep.max_ir, 2u);
}
