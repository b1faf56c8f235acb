#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arrdmod/arrangement.hpp"
#include "arrdmod/cli.hpp"
#include "arrdmod/document.hpp"
#include "arrdmod/error.hpp"
#include "arrdmod/factors.hpp"
#include "arrdmod/poset.hpp"
#include "arrdmod/resolution.hpp"

namespace py = pybind11;

// mpz_class <-> int and mpq_class <-> fractions.Fraction. Rationals also
// load from int and from "p/q" strings; floats are rejected.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value.set_str(py::str(src).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr())) return false;
    if (py::isinstance<py::str>(src)) {
      try {
        value = arrdmod::parse_rational(src.cast<std::string>());
      } catch (const arrdmod::Error&) {
        return false;
      }
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    mpz_class num, den;
    num.set_str(py::str(src.attr("numerator")).cast<std::string>(), 10);
    den.set_str(py::str(src.attr("denominator")).cast<std::string>(), 10);
    if (den == 0) return false;
    value = mpq_class(num, den);
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    auto num = py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10));
    auto den = py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace arrdmod;

Limits limits_for(std::size_t limit) {
  Limits l;
  l.classify_max = std::max(l.classify_max, limit);
  l.enumerate_max = limit;
  return l;
}

}  // namespace

PYBIND11_MODULE(_arrdmod, m) {
  m.doc() = "Exact combinatorics of twisted D-modules on hyperplane arrangements";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<UnsupportedDimensionError>(m, "UnsupportedDimensionError", base.ptr());

  py::class_<Hyperplane>(m, "Hyperplane")
      .def(py::init<std::vector<Rational>, Rational>(), py::arg("normal"),
           py::arg("constant") = Rational(0))
      .def_property_readonly("normal", &Hyperplane::normal)
      .def_property_readonly("constant", &Hyperplane::constant)
      .def("__eq__", [](const Hyperplane& a, const Hyperplane& b) { return a == b; })
      .def("__str__", [](const Hyperplane& h) { return to_string(h); })
      .def("__repr__", [](const Hyperplane& h) { return "Hyperplane(" + to_string(h) + ")"; });

  py::class_<Arrangement>(m, "Arrangement")
      .def(py::init<std::size_t, std::vector<Hyperplane>>(), py::arg("dim"),
           py::arg("hyperplanes"))
      .def_property_readonly("dim", &Arrangement::dim)
      .def_property_readonly("hyperplanes", &Arrangement::hyperplanes)
      .def("__len__", &Arrangement::size);

  py::class_<Classification>(m, "Classification")
      .def_readonly("general_position", &Classification::general_position)
      .def_readonly("normal_crossing", &Classification::normal_crossing)
      .def_readonly("central", &Classification::central)
      .def_property_readonly("common_dim",
                             [](const Classification& c) { return c.common_intersection.dim(); });

  m.def("classify", [](const Arrangement& arr) { return classify(arr); }, py::arg("arr"));

  m.def(
      "essentialize",
      [](const Arrangement& arr) {
        auto e = essentialize(arr);
        return py::make_tuple(e.reduced, e.split.base_point, e.split.pivot_coordinates);
      },
      py::arg("arr"),
      "Returns (reduced arrangement, base point, pivot coordinates of the complement).");

  py::class_<Flat>(m, "Flat")
      .def_readonly("closure", &Flat::closure)
      .def_readonly("codim", &Flat::codim)
      .def_property_readonly("dim", [](const Flat& f) { return f.subspace.dim(); })
      .def_property_readonly("point", [](const Flat& f) { return f.subspace.base_point(); });

  py::class_<IntersectionPoset>(m, "IntersectionPoset")
      .def_readonly("flats", &IntersectionPoset::flats)
      .def_readonly("covers", &IntersectionPoset::covers)
      .def("__len__", [](const IntersectionPoset& p) { return p.flats.size(); });

  m.def("closure", &closure, py::arg("arr"), py::arg("subset"));
  m.def(
      "enumerate_flats",
      [](const Arrangement& arr, std::size_t limit) {
        return enumerate_flats(arr, limits_for(limit));
      },
      py::arg("arr"), py::arg("limit") = Limits{}.enumerate_max);
  m.def("hasse_dot", &hasse_dot, py::arg("poset"));

  py::class_<FactorReport>(m, "FactorReport")
      .def_readonly("supports", &FactorReport::supports)
      .def_readonly("count", &FactorReport::count);

  m.def(
      "decomposition_factors",
      [](const Arrangement& arr, std::vector<Rational> beta) {
        return decomposition_factors(arr, ExponentVector(std::move(beta)));
      },
      py::arg("arr"), py::arg("beta"));
  m.def("count_general_position", &count_general_position, py::arg("n"), py::arg("k"));
  m.def("flat_count_general_position", &flat_count_general_position, py::arg("n"),
        py::arg("m"));

  py::class_<BlowupCenter>(m, "BlowupCenter")
      .def_readonly("point", &BlowupCenter::point)
      .def_readonly("incident", &BlowupCenter::incident);

  py::class_<ResolutionData>(m, "ResolutionData")
      .def_readonly("hyperplanes", &ResolutionData::hyperplanes)
      .def_readonly("centers", &ResolutionData::centers)
      .def_readonly("multiplicities", &ResolutionData::multiplicities)
      .def_property_readonly("source", [](const ResolutionData& r) {
        return r.source == ResolutionSource::PlaneBlowup ? "PLANE_BLOWUP" : "USER_SUPPLIED";
      });

  m.def("user_resolution", &user_resolution, py::arg("m"), py::arg("multiplicities"));
  m.def(
      "plane_resolution",
      [](const Arrangement& arr, const std::vector<IndexSet>& extra) {
        return plane_resolution(arr, extra);
      },
      py::arg("arr"), py::arg("extra_centers") = std::vector<IndexSet>{});

  py::class_<ExtendedExponents>(m, "ExtendedExponents")
      .def_readonly("strict", &ExtendedExponents::strict)
      .def_readonly("exceptional", &ExtendedExponents::exceptional);

  m.def(
      "pullback_exponents",
      [](const ResolutionData& res, std::vector<Rational> beta) {
        return pullback_exponents(res, ExponentVector(std::move(beta)));
      },
      py::arg("res"), py::arg("beta"));

  py::class_<PullbackReport>(m, "PullbackReport")
      .def_readonly("exponents", &PullbackReport::exponents)
      .def_readonly("supports", &PullbackReport::supports)
      .def_readonly("count", &PullbackReport::count);

  m.def(
      "pullback_factors",
      [](const Arrangement& arr, std::vector<Rational> beta,
         const std::optional<ResolutionData>& res) {
        return pullback_factors(arr, ExponentVector(std::move(beta)), res);
      },
      py::arg("arr"), py::arg("beta"), py::arg("res") = py::none());

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("forms", &Certificate::forms)
      .def(
          "holds_for",
          [](const Certificate& c, std::vector<Rational> beta) {
            return c.holds_for(ExponentVector(std::move(beta)));
          },
          py::arg("beta"));

  m.def(
      "certificate",
      [](const Arrangement& arr, const std::optional<ResolutionData>& res) {
        return certificate(arr, res);
      },
      py::arg("arr"), py::arg("res") = py::none());

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("status", [](const Verdict& v) { return to_string(v.status); })
      .def_property_readonly("rule", [](const Verdict& v) { return rule_tag(v.rule); })
      .def_property_readonly("rule_name", [](const Verdict& v) { return rule_name(v.rule); })
      .def_readonly("certificate", &Verdict::certificate)
      .def_readonly("witness_hyperplane", &Verdict::witness_hyperplane)
      .def_readonly("witness_point", &Verdict::witness_point)
      .def_readonly("reason", &Verdict::reason);

  m.def(
      "irreducibility_verdict",
      [](const Arrangement& arr, std::vector<Rational> beta,
         const std::optional<ResolutionData>& res) {
        return irreducibility_verdict(arr, ExponentVector(std::move(beta)), res);
      },
      py::arg("arr"), py::arg("beta"), py::arg("res") = py::none());

  m.def(
      "load_input",
      [](const std::string& text) {
        auto doc = parse_input(text);
        return py::make_tuple(doc.arrangement(), doc.beta, doc.resolution());
      },
      py::arg("json_text"), "Parses an input document into (arrangement, beta, resolution).");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        auto r = cli::execute(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
