#include "chernlab/sop.hpp"

#include <algorithm>
#include <random>

#include "chernlab/ideal_ops.hpp"
#include "chernlab/monomial_ideal.hpp"

namespace chern {

namespace {

void check_elements(const QuotientModule& m, const std::vector<Polynomial>& xs) {
  if (xs.size() != m.dim()) {
    throw PreconditionError("expected " + std::to_string(m.dim()) + " parameters, got " +
                            std::to_string(xs.size()));
  }
  for (const auto& x : xs) {
    if (!x.ring().compatible(m.ring())) throw RingMismatch();
    if (!x.is_homogeneous()) throw Unsupported("non-homogeneous input");
  }
}

Ideal prefix_ideal(const QuotientModule& m, const std::vector<Polynomial>& xs, std::size_t i) {
  return m.ideal() + Ideal(m.ring(), std::vector<Polynomial>(xs.begin(), xs.begin() + i));
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur(n);
  auto walk = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == n) {
      cur.set(var, remaining);
      out.push_back(cur);
      cur.set(var, 0);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      cur.set(var, e);
      self(self, var + 1, remaining - e);
    }
    cur.set(var, 0);
  };
  walk(walk, 0, d);
  return out;
}

using Spaces = std::vector<std::vector<Monomial>>;

Spaces free_spaces(const QuotientModule& m, unsigned degree) {
  return Spaces(m.dim(), monomials_of_degree(m.ring().width(), degree));
}

Spaces distinguished_spaces(const QuotientModule& m, unsigned degree) {
  FiltrationChain chain = dimension_filtration(m.ideal());
  const std::size_t n = m.ring().width();
  MonomialIdeal base = MonomialIdeal::from_ideal(m.ideal());
  const auto all = monomials_of_degree(n, degree);
  Spaces spaces;
  for (std::size_t j = 1; j <= m.dim(); ++j) {
    std::size_t level = 0;
    for (std::size_t i = 1; i <= chain.length(); ++i) {
      if (chain.dims[i - 1] < j) level = i;
    }
    if (level == 0) {
      spaces.push_back(all);
      continue;
    }
    MonomialIdeal allowed = base.colon(MonomialIdeal::from_ideal(chain.levels[level]));
    std::vector<Monomial> space;
    std::copy_if(all.begin(), all.end(), std::back_inserter(space),
                 [&](const Monomial& u) { return allowed.contains(u); });
    if (space.empty()) {
      throw PreconditionError("no distinguished parameter of degree " + std::to_string(degree));
    }
    spaces.push_back(std::move(space));
  }
  return spaces;
}

std::vector<ParameterSystem> draw(const QuotientModule& m, const Spaces& spaces, unsigned count,
                                  std::uint64_t seed, const SamplingOptions& options) {
  if (m.dim() == 0) throw PreconditionError("sampling parameters needs dim M >= 1");
  if (options.degree == 0) throw PreconditionError("parameter degree must be positive");
  const RingSpec& ring = m.ring();
  const Field& k = ring.field();
  const std::uint32_t bound =
      k.is_rational() ? 16u : std::min<std::uint32_t>(k.characteristic() - 1, 1u << 16);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(1, bound);
  std::vector<ParameterSystem> out;
  for (unsigned c = 0; c < count; ++c) {
    unsigned attempts = 0;
    for (;;) {
      if (attempts++ == options.retry_cap) {
        throw ResourceLimit("parameter sampling exceeded " + std::to_string(options.retry_cap) +
                            " retries");
      }
      ParameterSystem sys;
      for (const auto& space : spaces) {
        Terms terms;
        for (const auto& u : space) terms.push_back(Term{u, k.from_integer(coeff(rng))});
        sys.elements.emplace_back(ring, std::move(terms));
        sys.degrees.push_back(options.degree);
      }
      sys.certificate = verify_sop(m, sys.elements);
      if (sys.certificate.valid) {
        out.push_back(std::move(sys));
        break;
      }
    }
  }
  return out;
}

}  // namespace

Ideal ParameterSystem::ideal() const {
  if (elements.empty()) throw PreconditionError("empty parameter system");
  return Ideal(elements.front().ring(), elements);
}

SopCertificate verify_sop(const QuotientModule& m, const std::vector<Polynomial>& xs) {
  check_elements(m, xs);
  const std::size_t s = m.dim();
  SopCertificate cert;
  cert.dims.push_back(s);
  for (std::size_t i = 1; i <= s; ++i) {
    ReducedGB gb = buchberger(prefix_ideal(m, xs, i));
    if (gb.is_unit_ideal()) {
      cert.failed_at = i;
      return cert;
    }
    cert.dims.push_back(krull_dim(gb));
    if (cert.dims.back() != s - i) {
      cert.failed_at = i;
      return cert;
    }
  }
  cert.valid = true;
  return cert;
}

std::vector<ParameterSystem> sample_sop(const QuotientModule& m, unsigned count, std::uint64_t seed,
                                        const SamplingOptions& options) {
  return draw(m, free_spaces(m, options.degree), count, seed, options);
}

std::vector<ParameterSystem> sample_distinguished_sop(const QuotientModule& m, unsigned count,
                                                      std::uint64_t seed,
                                                      const SamplingOptions& options) {
  return draw(m, distinguished_spaces(m, options.degree), count, seed, options);
}

DSequenceResult is_d_sequence(const QuotientModule& m, const std::vector<Polynomial>& xs) {
  for (const auto& x : xs) {
    if (!x.ring().compatible(m.ring())) throw RingMismatch();
  }
  const std::size_t len = xs.size();
  for (std::size_t i = 0; i < len; ++i) {
    Ideal base = prefix_ideal(m, xs, i);
    for (std::size_t j = i + 1; j <= len; ++j) {
      Ideal lhs = colon(base, xs[i] * xs[j - 1]);
      Ideal rhs = colon(base, xs[j - 1]);
      if (!same_ideal(lhs, rhs)) return DSequenceResult{false, std::make_pair(i, j)};
    }
  }
  return {};
}

bool is_distinguished(const QuotientModule& m, const std::vector<Polynomial>& xs) {
  check_elements(m, xs);
  FiltrationChain chain = dimension_filtration(m.ideal());
  const std::size_t s = xs.size();
  for (std::size_t i = 1; i < chain.length(); ++i) {
    for (std::size_t j = chain.dims[i - 1] + 1; j <= s; ++j) {
      for (const auto& g : chain.levels[i].generators()) {
        if (!normal_form(xs[j - 1] * g, m.gb()).is_zero()) return false;
      }
    }
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::Partial: return "partial";
    case Verdict::True: return "true";
  }
  return "false";
}

std::string to_string(Check c) {
  switch (c) {
    case Check::Holds: return "holds";
    case Check::Violated: return "violated";
    case Check::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

GPredicate g_predicate(const QuotientModule& m, const std::vector<Polynomial>& xs) {
  check_elements(m, xs);
  GPredicate out;
  const bool monomial = is_monomial_ideal(m.ideal());
  if (monomial) {
    out.distinguished = is_distinguished(m, xs);
    if (!*out.distinguished) return out;
  }
  out.d_sequence = is_d_sequence(m, xs).holds;
  if (!*out.d_sequence) return out;

  if (!monomial) {
    out.ass_unchecked = 1;
    out.verdict = Verdict::Partial;
    return out;
  }
  const RingSpec& ring = m.ring();
  const std::size_t n = ring.width();
  FiltrationChain chain = dimension_filtration(m.ideal());
  for (std::size_t i = 1; i <= chain.length(); ++i) {
    MonomialIdeal upper = MonomialIdeal::from_ideal(chain.levels[i]);
    MonomialIdeal lower = MonomialIdeal::from_ideal(chain.levels[i - 1]);
    if (upper.generators().size() != 1) {
      out.ass_unchecked += xs.size();
      continue;
    }
    Ideal presentation = lower.colon(upper.generators().front()).to_ideal(ring);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      Ideal quotient = presentation + Ideal(ring, std::vector<Polynomial>(xs.begin(), xs.begin() + j));
      ReducedGB gb = buchberger(quotient);
      if (gb.is_unit_ideal()) {
        ++out.ass_checked;
        continue;
      }
      if (!gb.is_monomial()) {
        ++out.ass_unchecked;
        continue;
      }
      ++out.ass_checked;
      const std::size_t top = krull_dim(gb);
      for (const auto& p : associated_primes(MonomialIdeal(n, gb.leading_monomials()))) {
        if (p.dimension != top && p.variables.size() != n) out.ass_holds = false;
      }
    }
  }
  if (!out.ass_holds) return out;
  out.verdict = out.ass_unchecked ? Verdict::Partial : Verdict::True;
  return out;
}

CmVerdict cm_test(const QuotientModule& m, unsigned samples, std::uint64_t seed,
                  const SeriesOptions& series) {
  if (m.dim() == 0) throw PreconditionError("CM test needs dim M >= 1");
  CmVerdict out;
  out.h0m_length = h0m(m).length;
  if (out.h0m_length > 0) {
    out.witness = "h0m";
    return out;
  }
  for (auto& sys : sample_sop(m, samples, seed)) {
    Ideal q = sys.ideal();
    CmSample rec{sys.elements, colength(m, q), hilbert_coeffs(m, q, series).poly.coeffs.front()};
    if (!out.witness_sample && static_cast<std::int64_t>(rec.colength) > rec.e0) {
      out.witness_sample = out.samples.size();
    }
    out.samples.push_back(std::move(rec));
  }
  if (out.witness_sample) {
    out.witness = "multiplicity";
  } else {
    out.cohen_macaulay = true;
  }
  return out;
}

namespace {

Check compare(bool ok) { return ok ? Check::Holds : Check::Violated; }

void merge(Check& total, Check c) {
  if (c == Check::Violated || total == Check::Violated) {
    total = Check::Violated;
  } else if (c == Check::Holds) {
    total = Check::Holds;
  }
}

}  // namespace

TheoremReport theorem_report(const QuotientModule& m, unsigned samples, std::uint64_t seed,
                             unsigned degree, const SeriesOptions& series) {
  TheoremReport report;
  report.degree = degree;
  report.seed = seed;
  report.cm = cm_test(m, samples, seed, series);
  const SamplingOptions sampling{degree};
  auto systems = is_monomial_ideal(m.ideal()) ? sample_distinguished_sop(m, samples, seed, sampling)
                                              : sample_sop(m, samples, seed, sampling);
  const std::size_t s = m.dim();
  for (std::size_t idx = 0; idx < systems.size(); ++idx) {
    SampleRecord rec;
    rec.index = idx;
    rec.system = std::move(systems[idx]);
    Ideal q = rec.system.ideal();
    try {
      rec.ir = socle_dim(m, q);
      rec.colength = colength(m, q);
      auto hs = hilbert_coeffs(m, q, series).poly.coeffs;
      rec.e0 = hs[0];
      if (hs.size() > 1) rec.e1_q = hs[1];
      rec.f0 = irreducible_coeffs(m, q, series).poly.coeffs.front();
      if (s >= 2) {
        Ideal colon_ideal = socle_ideal(m, q);
        if (buchberger(colon_ideal).is_unit_ideal()) {
          rec.notice = "q : m is the unit ideal";
        } else {
          rec.e1_colon = hilbert_coeffs(m, colon_ideal, series).poly.coeffs[1];
        }
      }
    } catch (const NotStabilized& e) {
      rec.skipped = true;
      rec.notice = e.what();
      report.samples.push_back(std::move(rec));
      continue;
    }
    rec.g = g_predicate(m, rec.system.elements);
    const auto gap = rec.e1_gap();
    if (report.cm.cohen_macaulay) {
      rec.ir_le_f0 = compare(static_cast<std::int64_t>(rec.ir) <= *rec.f0);
      if (s >= 2 && gap) rec.ir_le_e1_gap = compare(static_cast<std::int64_t>(rec.ir) <= *gap);
    } else if (degree >= 2 && rec.g.verdict != Verdict::False && s >= 2 && gap) {
      rec.e1_gap_le_f0 = compare(*gap <= *rec.f0);
    }
    report.max_ir = std::max(report.max_ir, rec.ir);
    merge(report.ir_le_f0, rec.ir_le_f0);
    merge(report.ir_le_e1_gap, rec.ir_le_e1_gap);
    merge(report.e1_gap_le_f0, rec.e1_gap_le_f0);
    report.samples.push_back(std::move(rec));
  }
  return report;
}

}  // namespace chern
