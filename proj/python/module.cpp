// Python bindings for the core operations: genes from parameters or text,
// combinatorial weight enumeration and counting, Serre-weight sets, triple
// sampling, and Kisin-variety presentations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <string>
#include <vector>

#include "gw/errors.hpp"
#include "gw/gene.hpp"
#include "gw/kisin.hpp"
#include "gw/serre.hpp"
#include "gw/triple.hpp"
#include "gw/weights.hpp"

namespace py = pybind11;

namespace {

gw::cpp_int big_from_py(const py::object& o) {
  return gw::cpp_int(py::cast<std::string>(py::str(o)));
}

py::object big_to_py(const gw::cpp_int& v) {
  const std::string s = v.str();
  PyObject* raw = PyLong_FromString(s.c_str(), nullptr, 10);
  if (raw == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(raw);
}

std::vector<std::string> row_strings(const gw::Gene& g, bool top) {
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < g.f; ++i)
    out.push_back(gw::to_string(g.x[top ? i : i + g.f]));
  return out;
}

gw::CoherentTriple triple_of(std::uint32_t p, std::uint32_t f,
                             const py::object& h, const py::object& gamma,
                             const py::object& gamma_prime) {
  return gw::make_triple(p, f, big_from_py(h), big_from_py(gamma),
                         big_from_py(gamma_prime));
}

py::list weights_as_tuples(const std::vector<gw::CombinatorialWeight>& ws) {
  py::list out;
  for (const auto& w : ws) {
    py::tuple t(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) t[i] = static_cast<int>(w[i]);
    out.append(t);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(geneweights, m) {
  m.doc() =
      "Genes, combinatorial weights, Serre-weight sets, and Kisin-variety "
      "presentations for two-dimensional mod-p parameters";

  py::class_<gw::Gene>(m, "Gene")
      .def_property_readonly("f", [](const gw::Gene& g) { return g.f; })
      .def_property_readonly("top",
                             [](const gw::Gene& g) { return row_strings(g, true); })
      .def_property_readonly(
          "bottom", [](const gw::Gene& g) { return row_strings(g, false); })
      .def_property_readonly("viable",
                             [](const gw::Gene& g) { return gw::is_viable(g); })
      .def_property_readonly(
          "degenerate", [](const gw::Gene& g) { return gw::is_degenerate(g); })
      .def("weights",
           [](const gw::Gene& g) { return weights_as_tuples(gw::gene_weights(g)); },
           "All combinatorial weights, sorted lexicographically")
      .def("number_of_weights",
           [](const gw::Gene& g) { return big_to_py(gw::count_weights(g)); },
           "Exact weight count, without materializing the set")
      .def("is_weight",
           [](const gw::Gene& g, const std::vector<int>& w) {
             gw::CombinatorialWeight bits;
             for (int v : w) {
               if (v != 0 && v != 1) return false;
               bits.push_back(static_cast<std::uint8_t>(v));
             }
             return gw::is_weight(g, bits);
           })
      .def("kisin",
           [](const gw::Gene& g) {
             return gw::render_presentation(gw::presentation_of_gene(g));
           },
           "Text form of the Kisin-variety presentation")
      .def("component_counts",
           [](const gw::Gene& g) {
             py::list out;
             for (const auto& comp : gw::decompose(g))
               out.append(big_to_py(comp.weight_count));
             return out;
           },
           "Per-component weight counts of the presentation decomposition")
      .def("__str__", &gw::render_gene)
      .def("__repr__",
           [](const gw::Gene& g) {
             return "Gene(\"" + gw::render_gene(g) + "\")";
           })
      .def("__eq__",
           [](const gw::Gene& g, const gw::Gene& other) {
             return g.f == other.f && g.x == other.x;
           },
           py::is_operator());

  py::class_<gw::SerreWeight>(m, "SerreWeight")
      .def_property_readonly("s",
                             [](const gw::SerreWeight& w) { return big_to_py(w.s); })
      .def_property_readonly("r", [](const gw::SerreWeight& w) { return w.r; })
      .def("__str__", [](const gw::SerreWeight& w) { return gw::to_string(w); })
      .def("__repr__", [](const gw::SerreWeight& w) { return gw::to_string(w); })
      .def("__eq__",
           [](const gw::SerreWeight& w, const gw::SerreWeight& other) {
             return w == other;
           },
           py::is_operator());

  m.def("parse_gene", &gw::parse_gene, py::arg("text"),
        "Gene from its text form \"top/bottom\" with comma-separated letters");
  m.def(
      "gene",
      [](std::uint32_t p, std::uint32_t f, const py::object& h,
         const py::object& gamma, const py::object& gamma_prime) {
        return gw::gene_of_triple(triple_of(p, f, h, gamma, gamma_prime));
      },
      py::arg("p"), py::arg("f"), py::arg("h"), py::arg("gamma"),
      py::arg("gamma_prime"), "Gene of a coherent parameter triple");
  m.def(
      "rep_weights",
      [](std::uint32_t p, std::uint32_t f, const py::object& h) {
        return gw::weights_of_rep(p, f, big_from_py(h));
      },
      py::arg("p"), py::arg("f"), py::arg("h"),
      "Serre weights attached to the representation parameter h, sorted");
  m.def(
      "type_weights",
      [](std::uint32_t p, std::uint32_t f, const py::object& gamma,
         const py::object& gamma_prime) {
        return gw::weights_of_type(p, f, big_from_py(gamma),
                                   big_from_py(gamma_prime));
      },
      py::arg("p"), py::arg("f"), py::arg("gamma"), py::arg("gamma_prime"),
      "Serre weights attached to the inertial type (gamma, gamma'), sorted");
  m.def(
      "common_weights",
      [](std::uint32_t p, std::uint32_t f, const py::object& h,
         const py::object& gamma, const py::object& gamma_prime) {
        return gw::common_weights_fast(triple_of(p, f, h, gamma, gamma_prime));
      },
      py::arg("p"), py::arg("f"), py::arg("h"), py::arg("gamma"),
      py::arg("gamma_prime"),
      "Common Serre weights of the triple, via the per-weight recipe");
  m.def(
      "sample",
      [](const gw::Gene& g, std::uint32_t p, std::uint64_t seed,
         std::uint32_t retries) {
        std::mt19937_64 rng(seed);
        for (std::uint32_t k = 0; k < retries; ++k) {
          const auto t = gw::sample_triple(g, p, rng);
          if (!t) continue;
          py::dict out;
          out["p"] = t->p;
          out["f"] = t->f;
          out["h"] = big_to_py(gw::to_int(t->h));
          out["gamma"] = big_to_py(gw::to_int(t->gamma));
          out["gamma_prime"] = big_to_py(gw::to_int(t->gamma_prime));
          return out;
        }
        throw std::runtime_error("sampler exhausted after " +
                                 std::to_string(retries) + " draws");
      },
      py::arg("gene"), py::arg("p"), py::arg("seed") = 0,
      py::arg("retries") = 64,
      "Uniform coherent triple exhibiting the gene; deterministic per seed");
}
