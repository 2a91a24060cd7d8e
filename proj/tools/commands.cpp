#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chernlab/ideal_ops.hpp"
#include "chernlab/invariants.hpp"
#include "chernlab/monomial_ideal.hpp"
#include "chernlab/sop.hpp"
#include "job.hpp"

namespace chern::cli {

namespace {

Json poly_list(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json ideal_json(const Ideal& ideal) { return poly_list(ideal.generators()); }

Json series_json(const IntegerSeries& s) {
  return Json{{"start", s.start}, {"values", s.values}};
}

Json fit_json(const SeriesFit& fit) {
  return Json{{"degree", fit.poly.degree},
              {"coefficients", fit.poly.coeffs},
              {"n_star", fit.poly.n_star},
              {"series", series_json(fit.series)}};
}

Json optional_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Field parse_field(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.size() > 1 && text[0] == 'F' &&
      std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    if (text.size() > 11) throw PreconditionError("characteristic too large");
    return Field::prime(std::stoull(text.substr(1)));
  }
  throw ParseError("field must be Q or F<p>, got '" + text + "'");
}

MonomialOrder parse_order(const std::string& text) {
  if (text == "grevlex") return MonomialOrder::grevlex();
  if (text == "lex") return MonomialOrder::lex();
  throw ParseError("order must be grevlex or lex, got '" + text + "'");
}

SeriesOptions series_options(const Job& job) {
  SeriesOptions o;
  o.nmax = std::max(job.nmax, 1u);
  o.nmax_cap = std::max(o.nmax, 64u);
  return o;
}

RingSpec example_ring(const Job& job, std::vector<std::string> vars) {
  Field field = job.field.empty() ? Field::prime(32003) : parse_field(job.field);
  MonomialOrder order = job.order.empty() ? MonomialOrder::grevlex() : parse_order(job.order);
  return RingSpec(field, std::move(vars), order);
}

Setup example_1(const Job& job, unsigned d) {
  if (d < 1) throw PreconditionError("example 1 needs d >= 1");
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= d; ++i) vars.push_back("x" + std::to_string(i));
  vars.push_back("y");
  RingSpec ring = example_ring(job, vars);
  std::vector<Polynomial> xs;
  for (unsigned i = 0; i < d; ++i) xs.push_back(Polynomial::variable(ring, i));
  Ideal meet = intersect(Ideal(ring, xs), Ideal(ring, {Polynomial::variable(ring, d)}));
  return Setup{ring, Ideal(ring, buchberger(meet).basis())};
}

Setup example_2(const Job& job, unsigned a, unsigned b) {
  if (a < 1 || b < 1) throw PreconditionError("example 2 needs a, b >= 1");
  RingSpec ring = example_ring(job, {"x", "y", "z"});
  Polynomial x = Polynomial::variable(ring, 0);
  Polynomial z = Polynomial::variable(ring, 2);
  Ideal head(ring, {x.pow(a)});
  Ideal module = product(head, Ideal::maximal(ring)) + Ideal(ring, {z.pow(b)});
  return Setup{ring, module};
}

Json assertion(const std::string& name, const Json& expected, const Json& computed, bool pass) {
  return Json{{"name", name}, {"expected", expected}, {"computed", computed}, {"pass", pass}};
}

mpz_class binomial(long n, unsigned long k) {
  mpz_class v = 0;
  if (n >= 0) mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(n), k);
  return v;
}

Json report_json(const TheoremReport& report);

Json cm_json(const CmVerdict& cm) {
  Json samples = Json::array();
  for (const auto& s : cm.samples) {
    samples.push_back(Json{{"q", poly_list(s.elements)}, {"colength", s.colength}, {"e0", s.e0}});
  }
  return Json{{"cohen_macaulay", cm.cohen_macaulay},
              {"witness", cm.witness},
              {"h0m_length", cm.h0m_length},
              {"witness_sample", cm.witness_sample ? Json(*cm.witness_sample) : Json(nullptr)},
              {"samples", samples}};
}

Json g_json(const GPredicate& g) {
  auto opt = [](const std::optional<bool>& v) { return v ? Json(*v) : Json("unchecked"); };
  return Json{{"verdict", to_string(g.verdict)},
              {"distinguished", opt(g.distinguished)},
              {"d_sequence", opt(g.d_sequence)},
              {"ass_checked", g.ass_checked},
              {"ass_unchecked", g.ass_unchecked},
              {"ass_holds", g.ass_holds}};
}

Json report_json(const TheoremReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    Json rec{{"index", s.index},
             {"q", poly_list(s.system.elements)},
             {"drops", s.system.certificate.dims},
             {"skipped", s.skipped},
             {"notice", s.notice}};
    if (!s.skipped) {
      rec["ir"] = s.ir;
      rec["colength"] = s.colength;
      rec["e0"] = optional_json(s.e0);
      rec["colength_minus_e0"] =
          s.e0 ? Json(static_cast<std::int64_t>(s.colength) - *s.e0) : Json(nullptr);
      rec["f0"] = optional_json(s.f0);
      rec["e1_q"] = optional_json(s.e1_q);
      rec["e1_colon"] = optional_json(s.e1_colon);
      rec["e1_gap"] = optional_json(s.e1_gap());
      rec["g_predicate"] = g_json(s.g);
      rec["checks"] = Json{{"ir_le_f0", to_string(s.ir_le_f0)},
                           {"ir_le_e1_gap", to_string(s.ir_le_e1_gap)},
                           {"e1_gap_le_f0", to_string(s.e1_gap_le_f0)}};
    }
    samples.push_back(std::move(rec));
  }
  return Json{{"seed", report.seed},
              {"degree", report.degree},
              {"cm", cm_json(report.cm)},
              {"samples", samples},
              {"type_lower_bound", report.max_ir},
              {"verdicts",
               {{"ir_le_f0", to_string(report.ir_le_f0)},
                {"ir_le_e1_gap", to_string(report.ir_le_e1_gap)},
                {"e1_gap_le_f0", to_string(report.e1_gap_le_f0)}}}};
}

Json setup_json(const Setup& setup) {
  return Json{{"ring", setup.ring.to_string()}, {"module", ideal_json(setup.module)}};
}

}  // namespace

Json Job::echo() const {
  Json j{{"command", command}};
  if (!ring.empty()) j["ring"] = ring;
  if (!ideal.empty()) j["ideal"] = ideal;
  if (!module.empty()) j["module"] = module;
  if (!order.empty()) j["order"] = order;
  if (!field.empty()) j["field"] = field;
  j["nmax"] = nmax;
  j["samples"] = samples;
  j["seed"] = seed;
  j["degree"] = degree;
  if (example_1) j["example_1"] = *example_1;
  if (example_2) j["example_2"] = {example_2->first, example_2->second};
  if (command == "verify-paper") {
    j["example"] = example;
    if (example == 1) j["d"] = d;
    if (example == 2) {
      j["a"] = a;
      j["b"] = b;
    }
  }
  return j;
}

Setup resolve(const Job& job) {
  if ((job.example_1 || job.example_2) && !job.ring.empty()) {
    throw PreconditionError("--ring cannot be combined with an example constructor");
  }
  if (job.example_1 && job.example_2) throw PreconditionError("choose one example constructor");
  if (job.example_1) {
    if (!job.module.empty()) throw PreconditionError("--module cannot be combined with --example-1");
    return example_1(job, *job.example_1);
  }
  if (job.example_2) {
    if (!job.module.empty()) throw PreconditionError("--module cannot be combined with --example-2");
    return example_2(job, job.example_2->first, job.example_2->second);
  }
  if (job.ring.empty()) throw PreconditionError("--ring is required");
  RingSpec ring = parse_ring(job.ring);
  if (!job.field.empty() || !job.order.empty()) {
    ring = RingSpec(job.field.empty() ? ring.field() : parse_field(job.field), ring.variables(),
                    job.order.empty() ? ring.order() : parse_order(job.order));
  }
  Ideal module = job.module.empty() ? Ideal(ring) : parse_ideal(job.module, ring);
  return Setup{ring, module};
}

Ideal resolve_ideal(const Job& job, const RingSpec& ring) {
  if (job.ideal.empty()) throw PreconditionError("--ideal is required");
  return parse_ideal(job.ideal, ring);
}

Json cmd_gb(const Job& job) {
  Setup setup = resolve(job);
  Ideal ideal = job.ideal.empty() && (job.example_1 || job.example_2)
                    ? setup.module
                    : resolve_ideal(job, setup.ring);
  ReducedGB gb = buchberger(ideal);
  Json leads = Json::array();
  for (const auto& m : gb.leading_monomials()) leads.push_back(monomial_to_string(m, setup.ring));
  return Json{{"ring", setup.ring.to_string()},
              {"order", gb.order().name()},
              {"ideal", ideal_json(ideal)},
              {"basis", poly_list(gb.basis())},
              {"leading_monomials", leads},
              {"size", gb.basis().size()}};
}

Json cmd_invariants(const Job& job) {
  Setup setup = resolve(job);
  QuotientModule m(setup.module);
  Json result = setup_json(setup);
  result["dim"] = m.dim();
  Ideal ideal(setup.ring);
  if (job.ideal.empty()) {
    SamplingOptions sampling{job.degree};
    auto systems = is_monomial_ideal(m.ideal()) ? sample_distinguished_sop(m, 1, job.seed, sampling)
                                                : sample_sop(m, 1, job.seed, sampling);
    ideal = systems.front().ideal();
    result["ideal_sampled"] = true;
  } else {
    ideal = resolve_ideal(job, setup.ring);
    result["ideal_sampled"] = false;
  }
  result["ideal"] = ideal_json(ideal);
  result["colength"] = colength(m, ideal);
  result["socle_dim"] = socle_dim(m, ideal);
  const SeriesOptions options = series_options(job);
  try {
    result["hilbert"] = fit_json(hilbert_coeffs(m, ideal, options));
    if (m.dim() >= 1) {
      result["irreducible"] = fit_json(irreducible_coeffs(m, ideal, options));
    } else {
      result["irreducible"] = "not-applicable";
    }
  } catch (const SeriesNotStabilized& e) {
    result["partial_series"] = series_json(e.partial());
    throw CommandFailure(e.what(), 3, result);
  }
  TorsionPart h = h0m(m);
  result["h0m"] = Json{{"saturation", ideal_json(h.saturation)},
                       {"exponent", h.exponent},
                       {"length", h.length}};
  return result;
}

Json cmd_decompose(const Job& job) {
  Setup setup = resolve(job);
  Ideal ideal = !job.ideal.empty()    ? resolve_ideal(job, setup.ring)
                : !setup.module.is_zero() ? setup.module
                                          : throw PreconditionError("--ideal is required");
  if (!is_monomial_ideal(ideal)) throw Unsupported("non-monomial ideal");
  const RingSpec& ring = setup.ring;
  auto prime_json = [&](const MonomialPrime& p) {
    Json vars = Json::array();
    for (auto v : p.variables) vars.push_back(ring.variables()[v]);
    return Json{{"variables", vars}, {"dimension", p.dimension}};
  };
  Json irreducible = Json::array();
  for (const auto& c : irreducible_decomposition(ideal)) {
    irreducible.push_back(ideal_json(c.ideal().to_ideal(ring)));
  }
  Json primary = Json::array();
  Json ass = Json::array();
  std::set<std::size_t> lambda;
  for (const auto& c : primary_decomposition(ideal)) {
    primary.push_back(Json{{"primary", ideal_json(c.primary.to_ideal(ring))},
                           {"radical", prime_json(c.radical)}});
    ass.push_back(prime_json(c.radical));
    lambda.insert(c.radical.dimension);
  }
  FiltrationChain chain = dimension_filtration(ideal);
  Json levels = Json::array();
  for (const auto& k : chain.levels) levels.push_back(ideal_json(k));
  return Json{{"ring", ring.to_string()},
              {"ideal", ideal_json(ideal)},
              {"irreducible_components", irreducible},
              {"index_of_reducibility", irreducible.size()},
              {"primary_components", primary},
              {"associated_primes", ass},
              {"lambda", std::vector<std::size_t>(lambda.begin(), lambda.end())},
              {"filtration", {{"levels", levels}, {"dims", chain.dims}}},
              {"unmixed_component", ideal_json(unmixed_component(ideal))}};
}

Json cmd_check(const Job& job) {
  Setup setup = resolve(job);
  QuotientModule m(setup.module);
  const unsigned samples = job.samples ? job.samples : 10;
  Json result = setup_json(setup);
  result["dim"] = m.dim();
  result["report"] = report_json(theorem_report(m, samples, job.seed, job.degree, series_options(job)));
  return result;
}

namespace {

Json verify_example_1(const Job& job) {
  if (job.d < 3) throw PreconditionError("example 1 requires d >= 3");
  const unsigned d = job.d;
  Setup setup = example_1(job, d);
  QuotientModule m(setup.module);
  Json result = setup_json(setup);
  Json checks = Json::array();

  checks.push_back(assertion("dim R = d", d, m.dim(), m.dim() == d));
  std::set<std::size_t> lambda;
  for (const auto& p : associated_primes(m.ideal())) lambda.insert(p.dimension);
  std::vector<std::size_t> lam(lambda.begin(), lambda.end());
  checks.push_back(assertion("Lambda(R) = {1, d}", std::vector<std::size_t>{1, d}, lam,
                             lam == std::vector<std::size_t>{1, d}));
  FiltrationChain chain = dimension_filtration(m.ideal());
  Ideal y(setup.ring, {Polynomial::variable(setup.ring, d)});
  const bool unmixed_ok = chain.length() == 2 && same_ideal(chain.levels[1], y);
  checks.push_back(assertion("unmixed component K_1 = (y)", ideal_json(y), ideal_json(chain.levels[1]),
                             unmixed_ok));
  TorsionPart h = h0m(m);
  checks.push_back(assertion("H^0_m(R) = 0", 0, h.length, h.length == 0));
  CmVerdict cm = cm_test(m, 3, job.seed, series_options(job));
  checks.push_back(assertion("R is not Cohen-Macaulay", false, cm.cohen_macaulay, !cm.cohen_macaulay));

  // Socle series of a distinguished linear system of parameters.
  SeriesOptions series = series_options(job);
  series.nmax_cap = std::max(series.nmax, 16u);
  ParameterSystem sys = sample_distinguished_sop(m, 1, job.seed).front();
  Ideal q = sys.ideal();
  result["distinguished_sop"] = poly_list(sys.elements);
  result["distinguished"] = is_distinguished(m, sys.elements);
  SeriesFit ir = irreducible_coeffs(m, q, series);
  result["ir_series"] = fit_json(ir);
  Json expected = Json::array();
  Json computed = Json::array();
  bool series_ok = true;
  for (unsigned n = ir.poly.n_star; n <= ir.series.last(); ++n) {
    // C(d - 1 + n - 1, d - 1) + 1
    mpz_class v = binomial(static_cast<long>(d + n) - 2, d - 1) + 1;
    expected.push_back(v.get_str());
    computed.push_back(std::to_string(ir.series.at(n)));
    if (v != mpz_class(static_cast<long>(ir.series.at(n)))) series_ok = false;
  }
  checks.push_back(assertion("ir_R(q^{n+1}) = C(d-1+n-1, d-1) + 1 on the stabilized window",
                             expected, computed, series_ok));
  checks.push_back(assertion("f_0(q;R) = 1", 1, ir.poly.coeffs.front(), ir.poly.coeffs.front() == 1));

  // Theorem instance on parameter ideals inside m^2.
  const unsigned samples = job.samples ? job.samples : 5;
  TheoremReport report = theorem_report(m, samples, job.seed, 2, series_options(job));
  result["report"] = report_json(report);
  for (const auto& s : report.samples) {
    const std::string tag = "sample " + std::to_string(s.index) + ": ";
    if (s.skipped) {
      checks.push_back(assertion(tag + "stabilized", true, s.notice, false));
      continue;
    }
    auto gap = s.e1_gap();
    checks.push_back(assertion(tag + "e_1(q:m) - e_1(q) = 1", 1, optional_json(gap), gap && *gap == 1));
    checks.push_back(assertion(tag + "f_0(q;R) = 1", 1, optional_json(s.f0), s.f0 && *s.f0 == 1));
  }
  result["assertions"] = checks;
  return result;
}

Json verify_example_2(const Job& job) {
  if (job.a < 2 || job.b < 2) throw PreconditionError("example 2 requires a, b >= 2");
  Setup setup = example_2(job, job.a, job.b);
  QuotientModule m(setup.module);
  Json result = setup_json(setup);
  Json checks = Json::array();
  const RingSpec& ring = setup.ring;

  checks.push_back(assertion("dim R = 1", 1, m.dim(), m.dim() == 1));
  TorsionPart h = h0m(m);
  Ideal expected_sat(ring, {Polynomial::variable(ring, 0).pow(job.a),
                            Polynomial::variable(ring, 2).pow(job.b)});
  checks.push_back(assertion("H^0_m(R) = (x^a, z^b)/J", ideal_json(expected_sat),
                             ideal_json(h.saturation), same_ideal(h.saturation, expected_sat)));
  checks.push_back(assertion("length H^0_m(R) = 1", 1, h.length, h.length == 1));
  CmVerdict cm = cm_test(m, 3, job.seed, series_options(job));
  checks.push_back(assertion("R is not Cohen-Macaulay", false, cm.cohen_macaulay, !cm.cohen_macaulay));

  const unsigned samples = job.samples ? job.samples : 20;
  Json records = Json::array();
  Json degenerate = Json::array();
  const Monomial y_mono = Monomial::variable(ring.width(), 1);
  for (auto& sys : sample_sop(m, samples, job.seed)) {
    const Polynomial& f = sys.elements.front();
    const bool has_y = std::any_of(f.terms().begin(), f.terms().end(),
                                   [&](const Term& t) { return t.monomial == y_mono; });
    Ideal q = sys.ideal();
    const std::size_t ir = socle_dim(m, q);
    const std::int64_t f0 = irreducible_coeffs(m, q, series_options(job)).poly.coeffs.front();
    records.push_back(Json{{"q", f.to_string()}, {"ir", ir}, {"f0", f0}, {"y_coefficient_zero", !has_y}});
    if (!has_y) {
      degenerate.push_back(f.to_string());
      continue;
    }
    const std::string tag = "q = (" + f.to_string() + "): ";
    checks.push_back(assertion(tag + "ir_R(q) = 2", 2, ir, ir == 2));
    checks.push_back(assertion(tag + "ir_R(q) <= f_0(q;R)", ir, f0, static_cast<std::int64_t>(ir) <= f0));
  }
  result["samples"] = records;
  result["degenerate_samples"] = degenerate;
  result["assertions"] = checks;
  return result;
}

}  // namespace

Json cmd_verify_paper(const Job& job) {
  Json result;
  if (job.example == 1) {
    result = verify_example_1(job);
  } else if (job.example == 2) {
    result = verify_example_2(job);
  } else {
    throw PreconditionError("--example must be 1 or 2");
  }
  std::size_t failed = 0;
  for (const auto& a : result["assertions"]) failed += a["pass"].get<bool>() ? 0 : 1;
  result["failed"] = failed;
  result["status"] = failed ? "fail" : "pass";
  if (failed) throw CommandFailure(std::to_string(failed) + " assertion(s) failed", 5, result);
  return result;
}

}  // namespace chern::cli
