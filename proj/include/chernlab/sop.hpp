#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chernlab/invariants.hpp"

namespace chern {

/// dims[i] = dim S/(J + (x_1, ..., x_i)) for i = 0..s; valid iff dims[i] = s - i.
struct SopCertificate {
  bool valid = false;
  std::vector<std::size_t> dims;
  /// First i (1-based) at which the drop fails; 0 when valid.
  std::size_t failed_at = 0;
};

struct ParameterSystem {
  std::vector<Polynomial> elements;
  std::vector<unsigned> degrees;
  SopCertificate certificate;

  Ideal ideal() const;
};

/// Throws PreconditionError when |xs| != dim M, Unsupported for
/// non-homogeneous elements.
SopCertificate verify_sop(const QuotientModule& m, const std::vector<Polynomial>& xs);

struct SamplingOptions {
  unsigned degree = 1;
  /// Candidates discarded per requested system before ResourceLimit.
  unsigned retry_cap = 64;
};

/// Random homogeneous forms of one degree with coefficients drawn from a
/// seeded generator; candidates failing verify_sop are redrawn.
std::vector<ParameterSystem> sample_sop(const QuotientModule& m, unsigned count, std::uint64_t seed,
                                        const SamplingOptions& options = {});

/// As sample_sop, but x_j is drawn from the degree part of J : K_i for the
/// largest i with d_i < j, which makes the system distinguished. Requires
/// monomial J; for t = 1 this coincides with sample_sop.
std::vector<ParameterSystem> sample_distinguished_sop(const QuotientModule& m, unsigned count,
                                                      std::uint64_t seed,
                                                      const SamplingOptions& options = {});

struct DSequenceResult {
  bool holds = true;
  /// (i, j) of the first failing equality q_i : x_{i+1} x_j = q_i : x_j.
  std::optional<std::pair<std::size_t, std::size_t>> failure;
};
DSequenceResult is_d_sequence(const QuotientModule& m, const std::vector<Polynomial>& xs);

/// x_j K_i ⊆ J for j > d_i. Throws Unsupported for non-monomial J.
bool is_distinguished(const QuotientModule& m, const std::vector<Polynomial>& xs);

enum class Verdict { False, Partial, True };
std::string to_string(Verdict v);

struct GPredicate {
  Verdict verdict = Verdict::False;
  std::optional<bool> distinguished;
  std::optional<bool> d_sequence;
  /// Pairs (i, j) whose Ass condition was decided, and whether all held.
  std::size_t ass_checked = 0;
  std::size_t ass_unchecked = 0;
  bool ass_holds = true;
};
GPredicate g_predicate(const QuotientModule& m, const std::vector<Polynomial>& xs);

struct CmSample {
  std::vector<Polynomial> elements;
  std::size_t colength = 0;
  std::int64_t e0 = 0;
};

struct CmVerdict {
  bool cohen_macaulay = false;
  /// "h0m", "multiplicity" or empty when CM.
  std::string witness;
  std::size_t h0m_length = 0;
  std::vector<CmSample> samples;
  /// Index into samples of the strict inequality witness.
  std::optional<std::size_t> witness_sample;
};
CmVerdict cm_test(const QuotientModule& m, unsigned samples, std::uint64_t seed,
                  const SeriesOptions& series = {});

enum class Check { Holds, Violated, NotApplicable };
std::string to_string(Check c);

struct SampleRecord {
  std::size_t index = 0;
  ParameterSystem system;
  bool skipped = false;
  std::string notice;
  std::size_t ir = 0;
  std::size_t colength = 0;
  std::optional<std::int64_t> e0;
  std::optional<std::int64_t> f0;
  std::optional<std::int64_t> e1_q;
  std::optional<std::int64_t> e1_colon;
  GPredicate g;
  Check ir_le_f0 = Check::NotApplicable;
  Check ir_le_e1_gap = Check::NotApplicable;
  Check e1_gap_le_f0 = Check::NotApplicable;

  std::optional<std::int64_t> e1_gap() const {
    if (!e1_q || !e1_colon) return std::nullopt;
    return *e1_colon - *e1_q;
  }
};

struct TheoremReport {
  CmVerdict cm;
  unsigned degree = 1;
  std::uint64_t seed = 0;
  std::vector<SampleRecord> samples;
  std::size_t max_ir = 0;
  Check ir_le_f0 = Check::NotApplicable;
  Check ir_le_e1_gap = Check::NotApplicable;
  Check e1_gap_le_f0 = Check::NotApplicable;
};

/// Distinguished sampling when J is monomial, plain sampling otherwise.
TheoremReport theorem_report(const QuotientModule& m, unsigned samples, std::uint64_t seed,
                             unsigned degree, const SeriesOptions& series = {});

}  // namespace chern
