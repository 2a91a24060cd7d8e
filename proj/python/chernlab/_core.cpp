#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chernlab/ideal_ops.hpp"
#include "chernlab/invariants.hpp"
#include "chernlab/monomial_ideal.hpp"
#include "chernlab/sop.hpp"

namespace py = pybind11;
using namespace chern;

namespace {

py::dict fit_dict(const SeriesFit& fit) {
  py::dict d;
  d["coefficients"] = fit.poly.coeffs;
  d["degree"] = fit.poly.degree;
  d["n_star"] = fit.poly.n_star;
  d["series"] = fit.series.values;
  return d;
}

std::vector<std::string> prime_names(const MonomialPrime& p, const RingSpec& ring) {
  std::vector<std::string> out;
  for (auto v : p.variables) out.push_back(ring.variables()[v]);
  return out;
}

py::object optional_int(const std::optional<std::int64_t>& v) {
  return v ? py::object(py::int_(*v)) : py::object(py::none());
}

py::dict g_dict(const GPredicate& g) {
  py::dict d;
  d["verdict"] = to_string(g.verdict);
  d["distinguished"] = g.distinguished;
  d["d_sequence"] = g.d_sequence;
  d["ass_checked"] = g.ass_checked;
  d["ass_unchecked"] = g.ass_unchecked;
  return d;
}

py::dict cm_dict(const CmVerdict& cm) {
  py::dict d;
  d["cohen_macaulay"] = cm.cohen_macaulay;
  d["witness"] = cm.witness;
  d["h0m_length"] = cm.h0m_length;
  py::list samples;
  for (const auto& s : cm.samples) {
    py::dict r;
    r["q"] = s.elements;
    r["colength"] = s.colength;
    r["e0"] = s.e0;
    samples.append(r);
  }
  d["samples"] = samples;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hilbert, Chern and irreducible coefficients of graded quotient rings";

  auto base = py::register_exception<Error>(m, "ChernError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<RingMismatch>(m, "RingMismatch", base.ptr());
  py::register_exception<NotStabilized>(m, "NotStabilized", base.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());

  py::class_<RingSpec>(m, "Ring")
      .def(py::init([](const std::string& text) { return parse_ring(text); }), py::arg("spec"))
      .def_property_readonly("variables", &RingSpec::variables)
      .def_property_readonly("field", [](const RingSpec& r) { return r.field().name(); })
      .def_property_readonly("order", [](const RingSpec& r) { return r.order().name(); })
      .def("poly", [](const RingSpec& r, const std::string& text) { return parse_poly(text, r); })
      .def("ideal", [](const RingSpec& r, const std::string& text) { return parse_ideal(text, r); })
      .def("maximal_ideal", [](const RingSpec& r) { return Ideal::maximal(r); })
      .def("__eq__", [](const RingSpec& a, const RingSpec& b) { return a == b; })
      .def("__str__", &RingSpec::to_string)
      .def("__repr__", [](const RingSpec& r) { return "Ring('" + r.to_string() + "')"; });

  py::class_<Polynomial>(m, "Polynomial")
      .def_property_readonly("ring", &Polynomial::ring)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("is_homogeneous", &Polynomial::is_homogeneous)
      .def("__add__", [](const Polynomial& f, const Polynomial& g) { return f + g; })
      .def("__sub__", [](const Polynomial& f, const Polynomial& g) { return f - g; })
      .def("__mul__", [](const Polynomial& f, const Polynomial& g) { return f * g; })
      .def("__neg__", [](const Polynomial& f) { return -f; })
      .def("__pow__", [](const Polynomial& f, unsigned e) { return f.pow(e); })
      .def("__eq__", [](const Polynomial& f, const Polynomial& g) { return f == g; })
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + f.to_string() + "')"; });

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const RingSpec& r, const std::string& text) { return parse_ideal(text, r); }),
           py::arg("ring"), py::arg("generators"))
      .def(py::init<RingSpec, std::vector<Polynomial>>(), py::arg("ring"), py::arg("generators"))
      .def_property_readonly("ring", &Ideal::ring)
      .def_property_readonly("generators", &Ideal::generators)
      .def("is_zero", &Ideal::is_zero)
      .def("is_homogeneous", &Ideal::is_homogeneous)
      .def("__add__", [](const Ideal& a, const Ideal& b) { return a + b; })
      .def("__mul__", [](const Ideal& a, const Ideal& b) { return product(a, b); })
      .def("__contains__", [](const Ideal& a, const Polynomial& f) { return contains(a, f); })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return same_ideal(a, b); })
      .def("__str__", &Ideal::to_string)
      .def("__repr__", [](const Ideal& i) { return "Ideal" + i.to_string(); });

  py::class_<ReducedGB>(m, "GroebnerBasis")
      .def_property_readonly("basis", &ReducedGB::basis)
      .def_property_readonly("order", [](const ReducedGB& g) { return g.order().name(); })
      .def("contains", &ReducedGB::contains)
      .def("normal_form", [](const ReducedGB& g, const Polynomial& f) { return normal_form(f, g); })
      .def("is_monomial", &ReducedGB::is_monomial)
      .def("__len__", [](const ReducedGB& g) { return g.basis().size(); });

  m.def("groebner", [](const Ideal& i) { return buchberger(i); }, py::arg("ideal"));
  m.def("groebner", [](const Ideal& i, const std::string& order) {
        return buchberger(i, order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex());
      }, py::arg("ideal"), py::arg("order"));
  m.def("intersect", py::overload_cast<const Ideal&, const Ideal&>(&intersect));
  m.def("colon", py::overload_cast<const Ideal&, const Ideal&>(&colon));
  m.def("saturate", [](const Ideal& i, const Ideal& j) {
    Saturation s = saturate(i, j);
    return py::make_tuple(s.ideal, s.exponent);
  });
  m.def("eliminate", &eliminate, py::arg("ideal"), py::arg("keep"));
  m.def("krull_dim", py::overload_cast<const Ideal&>(&krull_dim));
  m.def("vdim", py::overload_cast<const Ideal&>(&vdim_artinian));
  m.def("is_m_primary", &is_m_primary);

  m.def("is_monomial_ideal", &is_monomial_ideal);
  m.def("irreducible_decomposition", [](const Ideal& i) {
    std::vector<Ideal> out;
    for (const auto& c : irreducible_decomposition(i)) out.push_back(c.ideal().to_ideal(i.ring()));
    return out;
  });
  m.def("primary_decomposition", [](const Ideal& i) {
    py::list out;
    for (const auto& c : primary_decomposition(i)) {
      out.append(py::make_tuple(c.primary.to_ideal(i.ring()), prime_names(c.radical, i.ring()),
                                c.radical.dimension));
    }
    return out;
  });
  m.def("associated_primes", [](const Ideal& i) {
    py::list out;
    for (const auto& p : associated_primes(i)) {
      out.append(py::make_tuple(prime_names(p, i.ring()), p.dimension));
    }
    return out;
  });
  m.def("dimension_filtration", [](const Ideal& i) {
    FiltrationChain c = dimension_filtration(i);
    return py::make_tuple(c.levels, c.dims);
  });
  m.def("unmixed_component", &unmixed_component);

  py::class_<QuotientModule>(m, "QuotientModule")
      .def(py::init<Ideal>(), py::arg("defining_ideal"))
      .def_static("free", &QuotientModule::free, py::arg("ring"))
      .def_property_readonly("ring", &QuotientModule::ring)
      .def_property_readonly("ideal", &QuotientModule::ideal)
      .def_property_readonly("dim", &QuotientModule::dim);

  m.def("colength", &colength);
  m.def("socle_dim", &socle_dim);
  m.def("socle_ideal", &socle_ideal);
  m.def("hs_series", [](const QuotientModule& mod, const Ideal& i, unsigned nmax) {
    return hs_series(mod, i, nmax).values;
  }, py::arg("module"), py::arg("ideal"), py::arg("nmax") = 8);
  m.def("ir_series", [](const QuotientModule& mod, const Ideal& i, unsigned nmax) {
    return ir_series(mod, i, nmax).values;
  }, py::arg("module"), py::arg("ideal"), py::arg("nmax") = 8);
  m.def("fit_binomial", [](const std::vector<std::int64_t>& values, unsigned s, unsigned start,
                           unsigned window) {
    IntegerSeries series{start, values};
    return fit_dict(SeriesFit{series, fit_binomial(series, s, window)});
  }, py::arg("values"), py::arg("degree"), py::arg("start") = 0, py::arg("window") = 3);
  m.def("hilbert_coeffs", [](const QuotientModule& mod, const Ideal& i, unsigned nmax) {
    return fit_dict(hilbert_coeffs(mod, i, SeriesOptions{nmax}));
  }, py::arg("module"), py::arg("ideal"), py::arg("nmax") = 8);
  m.def("irreducible_coeffs", [](const QuotientModule& mod, const Ideal& i, unsigned nmax) {
    return fit_dict(irreducible_coeffs(mod, i, SeriesOptions{nmax}));
  }, py::arg("module"), py::arg("ideal"), py::arg("nmax") = 8);
  m.def("h0m", [](const QuotientModule& mod) {
    TorsionPart t = h0m(mod);
    py::dict d;
    d["saturation"] = t.saturation;
    d["exponent"] = t.exponent;
    d["length"] = t.length;
    return d;
  });

  m.def("sample_sop", [](const QuotientModule& mod, unsigned count, std::uint64_t seed,
                         unsigned degree, bool distinguished) {
    SamplingOptions o{degree};
    auto systems = distinguished ? sample_distinguished_sop(mod, count, seed, o)
                                 : sample_sop(mod, count, seed, o);
    std::vector<std::vector<Polynomial>> out;
    for (auto& s : systems) out.push_back(std::move(s.elements));
    return out;
  }, py::arg("module"), py::arg("count"), py::arg("seed"), py::arg("degree") = 1,
        py::arg("distinguished") = false);
  m.def("verify_sop", [](const QuotientModule& mod, const std::vector<Polynomial>& xs) {
    SopCertificate c = verify_sop(mod, xs);
    py::dict d;
    d["valid"] = c.valid;
    d["dims"] = c.dims;
    d["failed_at"] = c.failed_at;
    return d;
  });
  m.def("is_d_sequence", [](const QuotientModule& mod, const std::vector<Polynomial>& xs) {
    DSequenceResult r = is_d_sequence(mod, xs);
    return py::make_tuple(r.holds, r.failure);
  });
  m.def("is_distinguished", &is_distinguished);
  m.def("g_predicate", [](const QuotientModule& mod, const std::vector<Polynomial>& xs) {
    return g_dict(g_predicate(mod, xs));
  });
  m.def("cm_test", [](const QuotientModule& mod, unsigned samples, std::uint64_t seed) {
    return cm_dict(cm_test(mod, samples, seed));
  }, py::arg("module"), py::arg("samples") = 5, py::arg("seed") = 1);
  m.def("theorem_report", [](const QuotientModule& mod, unsigned samples, std::uint64_t seed,
                             unsigned degree) {
    TheoremReport r = theorem_report(mod, samples, seed, degree);
    py::dict d;
    d["cm"] = cm_dict(r.cm);
    d["type_lower_bound"] = r.max_ir;
    d["ir_le_f0"] = to_string(r.ir_le_f0);
    d["ir_le_e1_gap"] = to_string(r.ir_le_e1_gap);
    d["e1_gap_le_f0"] = to_string(r.e1_gap_le_f0);
    py::list samples_out;
    for (const auto& s : r.samples) {
      py::dict rec;
      rec["q"] = s.system.elements;
      rec["skipped"] = s.skipped;
      rec["ir"] = s.ir;
      rec["colength"] = s.colength;
      rec["e0"] = optional_int(s.e0);
      rec["f0"] = optional_int(s.f0);
      rec["e1_gap"] = optional_int(s.e1_gap());
      rec["g_predicate"] = g_dict(s.g);
      samples_out.append(rec);
    }
    d["samples"] = samples_out;
    return d;
  }, py::arg("module"), py::arg("samples") = 5, py::arg("seed") = 1, py::arg("degree") = 1);
}
