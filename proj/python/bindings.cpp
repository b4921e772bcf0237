#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fusioninv/classify.hpp"
#include "fusioninv/errors.hpp"
#include "fusioninv/fixtures.hpp"
#include "fusioninv/invariants.hpp"
#include "fusioninv/io.hpp"

namespace py = pybind11;
using namespace fusioninv;

namespace {

// pybind11 holders cannot hold pointers to const, so systems travel in a small wrapper.
struct System {
  SystemPtr ptr;
};

py::object to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::complex<double> to_std(const Complex& z) { return {z.re().convert_to<double>(), z.im().convert_to<double>()}; }

py::tuple labels_of(const BasedRing& ring, std::initializer_list<LabelId> ids) {
  py::tuple t(ids.size());
  std::size_t k = 0;
  for (LabelId x : ids) t[k++] = ring.label(x);
  return t;
}

NumericPolicy policy(double tol, double zero_tol) {
  NumericPolicy p;
  p.precision = working_precision();
  p.tol = tol;
  p.zero_tol = zero_tol;
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gauge-invariant classification of multiplicity-free fusion categories";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  auto validation = py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<NotMultiplicityFree>(m, "NotMultiplicityFree", validation.ptr());
  py::register_exception<DomainMismatch>(m, "DomainMismatch", error.ptr());
  py::register_exception<ZeroSetMismatch>(m, "ZeroSetMismatch", error.ptr());
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", error.ptr());
  py::register_exception<ArgumentError>(m, "ArgumentError", error.ptr());

  m.def("set_precision", &set_working_precision, py::arg("digits"));
  m.def("precision", &working_precision);

  py::class_<BasedRing>(m, "Ring")
      .def_property_readonly("name", &BasedRing::name)
      .def_property_readonly("labels", &BasedRing::labels)
      .def_property_readonly("multiplicity_free", &BasedRing::multiplicity_free)
      .def("__len__", &BasedRing::size)
      .def("N", [](const BasedRing& r, const std::string& a, const std::string& b, const std::string& c) {
        auto find = [&](const std::string& s) {
          auto x = r.find(s);
          if (!x) throw ArgumentError("unknown label '" + s + "'");
          return *x;
        };
        return r.N(find(a), find(b), find(c)).get_si();
      })
      .def("validate", [](const BasedRing& r, bool strict) { return to_py(io::to_json(r, validate_ring(r, strict))); },
           py::arg("strict") = false)
      .def("to_json", [](const BasedRing& r) { return io::dump(io::to_json(r)); })
      .def("__repr__", [](const BasedRing& r) { return "<Ring " + r.name() + " rank " + std::to_string(r.size()) + ">"; });

  m.def("parse_ring", &parse_ring, py::arg("text"), py::arg("name") = std::string());
  m.def("load_ring", [](const std::string& path) { return io::load_ring(path); }, py::arg("path"));
  m.def("trivial_ring", &fixtures::trivial_ring);
  m.def("fibonacci_ring", &fixtures::fibonacci_ring);
  m.def("z3_ring", &fixtures::z3_ring);
  m.def("repds3_ring", &fixtures::repds3_ring);

  py::class_<ZeroSet>(m, "ZeroSet")
      .def(py::init<>())
      .def(py::init([](std::vector<std::size_t> members) { return make_zero_set(std::move(members)); }))
      .def_readonly("members", &ZeroSet::members)
      .def("__len__", &ZeroSet::size)
      .def("__contains__", &ZeroSet::contains)
      .def(py::self == py::self);

  py::class_<System>(m, "System")
      .def(py::init([](BasedRing ring) { return System{FusionSystem::create(std::move(ring))}; }), py::arg("ring"))
      .def_property_readonly("ring", [](const System& s) { return s.ptr->ring(); })
      .def("gamma", [](const System& s) {
        std::vector<py::tuple> out;
        for (const auto& t : s.ptr->gamma()) out.push_back(labels_of(s.ptr->ring(), {t.a, t.b, t.c}));
        return out;
      })
      .def("phi", [](const System& s) {
        std::vector<py::tuple> out;
        for (const auto& p : s.ptr->phi()) out.push_back(labels_of(s.ptr->ring(), {p.a, p.b, p.c, p.d, p.e, p.f}));
        return out;
      })
      .def("automorphisms", [](const System& s) {
        std::vector<std::string> out;
        for (const auto& rho : s.ptr->automorphisms()) out.push_back(rho.cycle_string(s.ptr->ring()));
        return out;
      })
      .def("pentagon_count", [](const System& s) { return pentagon_instances(*s.ptr).size(); })
      .def("exponent_matrix", [](const System& s, const ZeroSet& zeros) {
        ExponentMatrix A = build_exponent_matrix(*s.ptr, zeros);
        std::vector<std::vector<long>> out;
        for (const auto& row : A.rows) {
          std::vector<long> r;
          for (const auto& x : row) r.push_back(x.get_si());
          out.push_back(std::move(r));
        }
        return out;
      }, py::arg("zeros") = ZeroSet{})
      .def("zero_set_orbit", [](const System& s, const ZeroSet& zeros) {
        return to_py(io::to_json(*s.ptr, zero_set_orbit(*s.ptr, zeros)));
      })
      .def("pattern", [](const System& s, int k) { return fixtures::repds3_pattern(*s.ptr, k); }, py::arg("k"),
           "Zero set of a Rep(D(S3)) pattern (1, 2 or 3).")
      .def("__repr__", [](const System& s) {
        return "<System " + s.ptr->ring().name() + ": |Gamma|=" + std::to_string(s.ptr->gamma().size()) +
               " |Phi|=" + std::to_string(s.ptr->phi().size()) + ">";
      });

  py::class_<Solution>(m, "Solution")
      .def_readwrite("name", &Solution::name)
      .def_readonly("note", &Solution::note)
      .def_property_readonly("values", [](const Solution& s) {
        std::vector<std::complex<double>> out;
        for (const auto& v : s.values) out.push_back(to_std(v));
        return out;
      })
      .def("value_strings", [](const Solution& s, std::size_t k) {
        return std::pair{s.values.at(k).re_string(), s.values.at(k).im_string()};
      }, py::arg("index"))
      .def("to_json", [](const Solution& s, unsigned digits) { return io::dump(io::to_json(s, digits)); },
           py::arg("digits") = 0)
      .def("__repr__", [](const Solution& s) { return "<Solution " + s.name + ">"; });

  m.def("parse_solution", [](const System& s, const std::string& text) { return io::parse_solution(s.ptr, text); });
  m.def("load_solution", [](const System& s, const std::string& path) { return io::load_solution(s.ptr, path); });
  m.def("fibonacci_solution", [](const System& s) { return fixtures::fibonacci_solution(s.ptr); });
  m.def("yang_lee_solution", [](const System& s) { return fixtures::yang_lee_solution(s.ptr); });
  m.def("z3_cocycle", [](const System& s, int k) { return fixtures::z3_cocycle(s.ptr, k); });
  m.def("repds3_standins", [](const System& s) { return fixtures::repds3_standins(s.ptr); });

  m.def("verify", [](const Solution& sol, double tol, double zero_tol) {
    return to_py(io::to_json(*sol.system, verify_solution(sol, policy(tol, zero_tol))));
  }, py::arg("solution"), py::arg("tol") = 1e-9, py::arg("zero_tol") = 1e-9);
  m.def("zero_set", [](const Solution& sol, double zero_tol) { return zero_set(sol, zero_tol); }, py::arg("solution"),
        py::arg("zero_tol") = 1e-9);
  m.def("apply_gauge", [](const Solution& sol, std::uint64_t seed) {
    return apply_gauge(sol, sample_normalized_gauge(*sol.system, seed));
  }, py::arg("solution"), py::arg("seed"), "Applies the normalized gauge sampled from `seed`.");
  m.def("apply_automorphism", [](const Solution& sol, const std::string& cycles) {
    return apply_automorphism(sol, parse_cycles(sol.system->ring(), cycles));
  }, py::arg("solution"), py::arg("cycles"));

  py::class_<InvariantBasis>(m, "Basis")
      .def("__len__", &InvariantBasis::size)
      .def_readonly("zeros", &InvariantBasis::zeros)
      .def("monomials", [](const InvariantBasis& b) {
        std::vector<std::string> out;
        for (const auto& mono : b.monomials) out.push_back(to_string(*b.system, mono));
        return out;
      })
      .def("covered", [](const InvariantBasis& b) { return phi_coverage_check(b).covered; })
      .def("to_json", [](const InvariantBasis& b) { return io::dump(io::to_json(b)); });

  m.def("invariant_basis", [](const System& s, const ZeroSet& zeros) { return invariant_basis(s.ptr, zeros); },
        py::arg("system"), py::arg("zeros") = ZeroSet{});
  m.def("parse_basis", [](const System& s, const std::string& text) { return io::parse_basis(s.ptr, text); });
  m.def("evaluate", [](const Solution& sol, const InvariantBasis& basis, double zero_tol) {
    std::vector<std::optional<std::complex<double>>> out;
    for (const auto& v : evaluate_basis(sol, basis, zero_tol).values)
      out.push_back(v ? std::optional(to_std(*v)) : std::nullopt);
    return out;
  }, py::arg("solution"), py::arg("basis"), py::arg("zero_tol") = 1e-9);
  m.def("rationality", [](const Solution& sol, const InvariantBasis& basis) {
    return to_py(io::to_json(rationality_check(evaluate_basis(sol, basis))));
  });
  m.def("localize", [](const InvariantBasis& basis) {
    return to_py(io::to_json(*basis.system, localize_pentagon(*basis.system, basis.zeros, basis)));
  });

  m.def("gauge_equivalent", [](const Solution& a, const Solution& b, double tol, double zero_tol) {
    return gauge_equivalent(a, b, policy(tol, zero_tol));
  }, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9, py::arg("zero_tol") = 1e-9);
  m.def("monoidal_equivalent", [](const Solution& a, const Solution& b, double tol,
                                  double zero_tol) -> std::optional<std::string> {
    auto w = monoidal_equivalent(a, b, policy(tol, zero_tol));
    if (!w) return std::nullopt;
    return w->cycle_string(a.system->ring());
  }, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9, py::arg("zero_tol") = 1e-9);
  m.def("classify", [](const System& s, const std::vector<Solution>& sols, bool verify, double tol, double zero_tol) {
    ClassifyOptions options;
    options.numeric = policy(tol, zero_tol);
    options.verify = verify;
    return to_py(io::to_json(*s.ptr, classify(s.ptr, sols, options)));
  }, py::arg("system"), py::arg("solutions"), py::arg("verify") = true, py::arg("tol") = 1e-9,
        py::arg("zero_tol") = 1e-9);
}
