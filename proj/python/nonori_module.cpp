// Python bindings. Triangulations cross the boundary as iso signatures,
// matrices as [[a,b],[c,d]] literals or 4-tuples, Seifert data as text.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonori/census.hpp"
#include "nonori/error.hpp"
#include "nonori/homology.hpp"
#include "nonori/isosig.hpp"
#include "nonori/layered.hpp"
#include "nonori/records.hpp"
#include "nonori/seifert.hpp"
#include "nonori/sol.hpp"
#include "nonori/spine.hpp"

namespace py = pybind11;
using namespace nonori;

namespace {

std::string rat(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

GL2Z to_matrix(const py::object& m) {
  if (py::isinstance<py::str>(m)) return GL2Z::parse(m.cast<std::string>());
  auto v = m.cast<std::array<std::int64_t, 4>>();
  return {v[0], v[1], v[2], v[3]};
}

// Census file used when no path is given; the package points it at its copy.
std::string data_path = default_census_path();

Triangulation load(const std::string& s) {
  if (s.rfind("[[", 0) == 0) return layered_torus_bundle(GL2Z::parse(s));
  return from_iso_sig(s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Census, homology, spine and Seifert tools for small non-orientable 3-manifolds";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", m.attr("DomainError"));

  m.def("_set_data_path", [](const std::string& p) { data_path = p; });
  m.def("data_path", [] { return data_path; });

  m.def("layered_bundle", [](const py::object& a) { return iso_sig(layered_torus_bundle(to_matrix(a))); },
        "Iso signature of the layered torus bundle with monodromy a.");
  m.def("size", [](const std::string& s) { return load(s).size(); });
  m.def("is_orientable", [](const std::string& s) { return is_orientable(load(s)).orientable; });
  m.def("vertex_count", [](const std::string& s) { return vertex_count(load(s)); });
  m.def("h1", [](const std::string& s) { return h1_integral(load(s)).str(); });
  m.def("fingerprint", [](const std::string& s) { return fingerprint(load(s)).str(); });
  m.def("double_cover", [](const std::string& s) { return iso_sig(orientation_double_cover(load(s)).cover); });

  m.def("spine_check", [](const std::string& s) {
    LemmaCertificate c = lemma_pipeline(load(s));
    py::dict d;
    d["n"] = c.n;
    d["ok"] = c.ok;
    d["failure"] = c.failure;
    d["surface_chi"] = c.sigma.euler;
    d["surface_orientable"] = c.sigma.orientable;
    d["cover_spine_vertices"] = c.collapse.remaining_vertices;
    return d;
  });

  m.def(
      "enumerate",
      [](int n, bool non_orientable, const std::string& prune, int threads) {
        EnumerateOptions o;
        o.n = n;
        o.non_orientable_only = non_orientable;
        o.prune = PruneOptions::parse(prune);
        o.threads = threads;
        py::gil_scoped_release release;
        return enumerate(o);
      },
      py::arg("n"), py::arg("non_orientable") = false, py::arg("prune") = "none", py::arg("threads") = 1);
  m.def("face_pairing_graph_count", [](int n) { return face_pairing_graphs(n).size(); });

  m.def("recognize", [](const std::string& s) {
    Triangulation t = load(s);
    std::vector<CensusRecord> records;
    if (is_orientable(t).orientable) records = ingest_orientable_census(data_path);
    return recognize(t, records).verdict();
  });

  m.def("chi_orb", [](const std::string& sd) { return rat(chi_orb(SeifertData::parse(sd))); });
  m.def("euler_number", [](const std::string& sd) -> std::optional<std::string> {
    auto e = euler_number(SeifertData::parse(sd));
    if (!e) return std::nullopt;
    return rat(*e);
  });
  m.def("geometry", [](const std::string& sd) { return geometry_name(classify_geometry(SeifertData::parse(sd))); });
  m.def("seifert_double_cover", [](const std::string& sd) { return seifert_double_cover(SeifertData::parse(sd)).str(); });
  m.def(
      "small_h2r_manifolds",
      [](std::int64_t num, std::int64_t den) {
        std::vector<std::string> out;
        for (const auto& s : small_h2r_manifolds(Rational(num, den))) out.push_back(s.str());
        return out;
      },
      py::arg("num") = -1, py::arg("den") = 6);

  m.def("sol_normalize", [](const py::object& a) { return normalize(to_matrix(a)).rep.str(); });
  m.def("sol_classify", [](const py::object& a) {
    SolClass c = classify_sol(to_matrix(a));
    return py::make_tuple(geometry_name(c.geometry), c.orientable);
  });
  m.def("sol_roots", [](const py::object& a) {
    std::vector<std::string> out;
    for (const auto& r : det_minus_one_roots(to_matrix(a))) out.push_back(r.str());
    return out;
  });

  m.def(
      "table1",
      [](const std::string& path) {
        auto r = reproduce_classification(ingest_orientable_census(path.empty() ? data_path : path));
        return py::make_tuple(std::vector<int>(r.counts.begin(), r.counts.end()), r.bullets);
      },
      py::arg("path") = "");
}
