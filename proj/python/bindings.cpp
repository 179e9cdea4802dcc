#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fusionkit/diagram.hpp"
#include "fusionkit/errors.hpp"
#include "fusionkit/orbits.hpp"
#include "fusionkit/verify.hpp"

namespace py = pybind11;
using namespace fusionkit;

namespace {

// Weights become tuples so they can key a dict.
py::dict to_terms(const std::map<Weight, Label>& m) {
  py::dict out;
  for (const auto& [w, c] : m) out[py::tuple(py::cast(w.labels()))] = c;
  return out;
}

RootSystem algebra(const std::string& name) { return build_root_system(parse_algebra(name)); }

Weight weight(const RootSystem& rs, const std::vector<Label>& labels) {
  Weight w(labels);
  rs.check_rank(w);
  return w;
}

py::object from_json(const Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

py::int_ big(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

}  // namespace

PYBIND11_MODULE(_fusionkit, m) {
  m.doc() = "Weight multiplicities, tensor products and level-k fusion rules";

  py::register_exception<InvalidAlgebra>(m, "InvalidAlgebra", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<LevelError>(m, "LevelError", PyExc_ValueError);
  py::register_exception<UnsupportedCoefficient>(m, "UnsupportedCoefficient", PyExc_ValueError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception<AxiomViolation>(m, "AxiomViolation", PyExc_RuntimeError);

  m.def(
      "weights",
      [](const std::string& alg, const std::vector<Label>& highest, std::size_t max_dim) {
        const RootSystem rs = algebra(alg);
        return to_terms(default_weight_cache().get(rs, weight(rs, highest), max_dim)->mults());
      },
      py::arg("algebra"), py::arg("highest"), py::arg("max_dim") = kDefaultMaxDim,
      "Weights of the irreducible module with their multiplicities.");

  m.def(
      "dimension",
      [](const std::string& alg, const std::vector<Label>& highest) {
        const RootSystem rs = algebra(alg);
        return big(weyl_dimension(rs, weight(rs, highest)));
      },
      py::arg("algebra"), py::arg("highest"));

  m.def(
      "tensor",
      [](const std::string& alg, const std::vector<Label>& lambda, const std::vector<Label>& mu, std::size_t max_dim) {
        const RootSystem rs = algebra(alg);
        return to_terms(racah_speiser(rs, weight(rs, lambda), weight(rs, mu), max_dim).terms);
      },
      py::arg("algebra"), py::arg("lam"), py::arg("mu"), py::arg("max_dim") = kDefaultMaxDim);

  m.def(
      "fusion",
      [](const std::string& alg, Label k, const std::vector<Label>& lambda, const std::vector<Label>& mu) {
        const RootSystem rs = algebra(alg);
        return to_terms(kac_walton(rs, weight(rs, lambda), weight(rs, mu), k));
      },
      py::arg("algebra"), py::arg("level"), py::arg("lam"), py::arg("mu"));

  m.def(
      "fusion_table",
      [](const std::string& alg, Label k, std::size_t max_basis) {
        return from_json(to_json(build_fusion_algebra(algebra(alg), k, {.max_basis = max_basis})));
      },
      py::arg("algebra"), py::arg("level"), py::arg("max_basis") = kDefaultMaxBasis,
      "The level-k fusion algebra as a JSON-shaped dict.");

  m.def(
      "render_table",
      [](const std::string& alg, Label k) { return render_fusion_algebra(build_fusion_algebra(algebra(alg), k)); },
      py::arg("algebra"), py::arg("level"));

  m.def("orbit_count", [](Label n, Label k, Label r) { return big(count_orbits_formula(n, k, r)); }, py::arg("n"),
        py::arg("k"), py::arg("r"));
  m.def("orbit_count_bruteforce", [](Label n, Label k, Label r) { return big(count_orbits_bruteforce(n, k, r)); },
        py::arg("n"), py::arg("k"), py::arg("r"));
  m.def("ramanujan_sum", &ramanujan_sum, py::arg("d"), py::arg("r"));

  m.def(
      "triple_orbits",
      [](Label n, const std::vector<Label>& a, const std::vector<Label>& b, const std::vector<Label>& c) {
        Label k = 0;
        for (Label x : a) k += x;
        return count_triple_orbits(make_orbit_label(n, k, a), make_orbit_label(n, k, b), make_orbit_label(n, k, c));
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "svg",
      [](const std::string& alg, std::optional<std::vector<Label>> highest, std::optional<Label> level,
         bool show_axes, bool show_mults) {
        DiagramSpec spec;
        spec.algebra = parse_algebra(alg);
        if (highest) spec.highest = Weight(*highest);
        spec.level = level;
        spec.show_axes = show_axes;
        spec.show_mults = show_mults;
        return render_svg(spec);
      },
      py::arg("algebra"), py::arg("highest") = py::none(), py::arg("level") = py::none(), py::arg("show_axes") = true,
      py::arg("show_mults") = true);

  m.def(
      "verify",
      [](const std::string& suite) {
        py::list out;
        for (const auto& r : run_suite(suite)) out.append(from_json(to_json(r)));
        return out;
      },
      py::arg("suite") = "all");
}
