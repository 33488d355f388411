#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "extremal/binom.hpp"
#include "extremal/cliques.hpp"
#include "extremal/colex.hpp"
#include "extremal/extremal.hpp"
#include "extremal/graph6.hpp"
#include "extremal/search.hpp"

namespace py = pybind11;

namespace {

// exact counts cross the boundary as Python ints, via decimal strings
py::object to_int(const extremal::Count& c) {
  PyObject* obj = PyLong_FromString(c.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

extremal::Graph graph_from(const std::string& graph6) { return extremal::parse_graph6(graph6); }

py::dict verdict_dict(const extremal::ExtremalityVerdict& v) {
  py::dict d;
  d["is_extremal"] = v.is_extremal;
  d["q_found"] = v.q_found;
  d["remainder_certificate"] = v.remainder_certificate.bytes;
  d["reason"] = v.reason;
  return d;
}

py::dict report_dict(const extremal::VerificationReport& r) {
  py::dict d;
  d["m"] = r.m;
  d["delta"] = r.delta ? py::object(py::int_(*r.delta)) : py::object(py::none());
  d["t"] = r.t ? py::object(py::int_(*r.t)) : py::object(py::none());
  d["oracle_max"] = to_int(r.oracle_max);
  d["formula"] = to_int(r.formula_value);
  d["match"] = r.match;
  py::list argmax;
  for (const auto& c : r.argmax) argmax.append(c.bytes);
  d["argmax"] = std::move(argmax);
  d["membership_agreement"] = r.membership_agreement;
  d["corpus_size"] = r.corpus_size;
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(extremal, m) {
  m.doc() = "extremal clique counts under a maximum-degree constraint";

  m.def("binom", [](long n, long k) { return to_int(extremal::binom_exact(n, k)); },
        py::arg("n"), py::arg("k"));

  m.def("colex_decompose",
        [](long long edges) {
          const auto d = extremal::colex_decompose(edges);
          return std::make_pair(d.r, d.s);
        },
        py::arg("m"), "(r, s) with m = C(r,2) + s, 0 <= s < r");

  m.def("colex_kt", [](long long edges, long long t) { return to_int(extremal::colex_kt(edges, t)); },
        py::arg("m"), py::arg("t"));

  m.def("kk_bound_real", &extremal::kk_bound_real, py::arg("m"), py::arg("t"));

  m.def("build_colex",
        [](long long edges) { return extremal::to_graph6(extremal::build_colex(edges)); },
        py::arg("m"), "graph6 of the graph on the first m colex pairs");

  m.def("decompose",
        [](long long edges, int delta) {
          const auto d = extremal::decompose(edges, delta);
          py::dict out;
          out["q"] = d.q;
          out["b"] = d.b;
          out["r"] = d.r;
          out["s"] = d.s;
          return out;
        },
        py::arg("m"), py::arg("delta"));

  m.def("extremal_value",
        [](int t, int delta, long long edges) {
          return to_int(extremal::extremal_value(t, delta, edges));
        },
        py::arg("t"), py::arg("delta"), py::arg("m"));

  m.def("total_extremal_value",
        [](int delta, long long edges) { return to_int(extremal::total_extremal_value(delta, edges)); },
        py::arg("delta"), py::arg("m"));

  m.def("vertex_extremal_value",
        [](long long n, int delta, int t) { return to_int(extremal::vertex_extremal_value(n, delta, t)); },
        py::arg("n"), py::arg("delta"), py::arg("t"));

  m.def("vertex_total_value",
        [](long long n, int delta) { return to_int(extremal::vertex_total_value(n, delta)); },
        py::arg("n"), py::arg("delta"));

  m.def("build_extremal",
        [](int t, int delta, long long edges) {
          return extremal::to_graph6(extremal::build_extremal(t, delta, edges));
        },
        py::arg("t"), py::arg("delta"), py::arg("m"),
        "graph6 of a maximizer: full-degree cliques plus the colex remainder");

  m.def("count_kt",
        [](const std::string& graph6, int t) { return to_int(extremal::count_kt(graph_from(graph6), t)); },
        py::arg("graph6"), py::arg("t"));

  m.def("clique_profile",
        [](const std::string& graph6) {
          const auto p = extremal::clique_profile(graph_from(graph6));
          py::dict counts;
          for (const auto& [t, c] : p.counts) counts[py::int_(t)] = to_int(c);
          py::dict out;
          out["counts"] = std::move(counts);
          out["total"] = to_int(p.total);
          return out;
        },
        py::arg("graph6"));

  m.def("canonical_form",
        [](const std::string& graph6) { return extremal::canonical_form(graph_from(graph6)).bytes; },
        py::arg("graph6"), "certificate; equal iff isomorphic modulo isolated vertices");

  m.def("is_extremal",
        [](const std::string& graph6, int t, int delta) {
          return verdict_dict(extremal::is_extremal(graph_from(graph6), t, delta));
        },
        py::arg("graph6"), py::arg("t"), py::arg("delta"));

  m.def("is_total_extremal",
        [](const std::string& graph6, int delta) {
          return verdict_dict(extremal::is_total_extremal(graph_from(graph6), delta));
        },
        py::arg("graph6"), py::arg("delta"));

  m.def("enumerate_graphs",
        [](long long edges, int delta, int jobs) {
          std::vector<std::string> out;
          for (const auto& g : extremal::enumerate_graphs({edges, delta}, jobs)) {
            out.push_back(extremal::to_graph6(g));
          }
          return out;
        },
        py::arg("m"), py::arg("delta") = -1, py::arg("jobs") = 0,
        "sorted graph6 certificates, one per isomorphism class");

  m.def("verify_main",
        [](long long edges, int delta, int t, long long cap, int jobs) {
          extremal::CorpusCache cache(cap, jobs);
          return report_dict(extremal::verify_main(edges, delta, t, cache));
        },
        py::arg("m"), py::arg("delta"), py::arg("t"), py::arg("cap") = 14, py::arg("jobs") = 0);

  m.def("verify_total",
        [](long long edges, int delta, long long cap, int jobs) {
          extremal::CorpusCache cache(cap, jobs);
          return report_dict(extremal::verify_total(edges, delta, cache));
        },
        py::arg("m"), py::arg("delta"), py::arg("cap") = 14, py::arg("jobs") = 0);

  m.def("verify_kk",
        [](long long edges, int t, long long cap, int jobs) {
          extremal::CorpusCache cache(cap, jobs);
          return report_dict(extremal::verify_kk(edges, t, cache));
        },
        py::arg("m"), py::arg("t"), py::arg("cap") = 14, py::arg("jobs") = 0);
}
