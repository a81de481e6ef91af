#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rainbowdom/certify.hpp"
#include "rainbowdom/constructions.hpp"
#include "rainbowdom/graph_spec.hpp"

namespace py = pybind11;
using namespace rainbowdom;

namespace {

using Labels = std::vector<std::vector<int>>;

Labels to_py(const RainbowLabeling& f) {
  Labels out;
  for (ColorSet c : f.labels()) {
    std::vector<int> colors;
    for (int color = 1; color <= f.k(); ++color)
      if (c.contains(color)) colors.push_back(color);
    out.push_back(std::move(colors));
  }
  return out;
}

RainbowLabeling from_py(const Labels& labels, int k) {
  RainbowLabeling f(k, static_cast<int>(labels.size()));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    ColorSet c;
    for (int color : labels[v]) {
      if (color < 1 || color > k) throw Error(ErrorCode::MalformedInput, "color out of range");
      c |= ColorSet::of({color});
    }
    f.set(static_cast<Vertex>(v), c);
  }
  return f;
}

SolverOptions budget(std::uint64_t nodes) { return SolverOptions{nodes}; }

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["lo"] = c.lo;
  d["hi"] = c.hi;
  d["exact"] = c.exact();
  d["case"] = to_string(c.tag);
  d["summary"] = certificate_summary(c);
  d["upper"] = to_py(c.upper);
  d["lower_parameter"] = c.lower.parameter;
  d["lower_value"] = c.lower.value;
  d["refined"] = c.refined ? py::object(py::int_(*c.refined)) : py::object(py::none());
  py::list hyps;
  for (const auto& h : c.hypotheses) hyps.append(py::make_tuple(h.statement, h.holds));
  d["hypotheses"] = hyps;
  d["citations"] = c.citations;
  py::list parts;
  for (const auto& p : c.parts) parts.append(certificate_dict(p));
  d["parts"] = parts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "k-rainbow domination on graphs and lexicographic products";
  py::register_exception<Error>(m, "RainbowError", PyExc_ValueError);

  const std::uint64_t default_budget = SolverOptions{}.node_budget;

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("order"))
      .def(py::init([](int order, const std::vector<Edge>& edges) { return Graph::from_edge_list(order, edges); }),
           py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("load_graph", [](const std::string& spec) { return load_graph(spec); }, py::arg("spec"),
        "Named graph (P5, C4, K3, S4, DC4, GLUED1,1), 'g6:...' or a .g6/.edges file.");
  m.def("is_connected", &is_connected);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("enumerate_connected_graphs", &enumerate_connected_graphs, py::arg("n"));
  m.def("lexicographic", [](const Graph& g, const Graph& h) { return lexicographic(g, h).graph; });
  m.def("cartesian", [](const Graph& g, const Graph& h) { return cartesian(g, h).graph; });

  m.def("min_dominating_set", [](const Graph& g, std::uint64_t nodes) {
        const SetResult r = min_dominating_set(g, budget(nodes));
        return py::make_tuple(r.value, r.witness.members());
      }, py::arg("g"), py::arg("budget") = default_budget);
  m.def("min_total_dominating_set", [](const Graph& g, std::uint64_t nodes) {
        const SetResult r = min_total_dominating_set(g, budget(nodes));
        return py::make_tuple(r.value, r.witness.members());
      }, py::arg("g"), py::arg("budget") = default_budget);
  m.def("min_rainbow", [](const Graph& g, int k, std::uint64_t nodes) {
        const RainbowResult r = min_rainbow(g, k, budget(nodes));
        return py::make_tuple(r.value, to_py(r.witness));
      }, py::arg("g"), py::arg("k"), py::arg("budget") = default_budget);
  m.def("min_rainbow_via_cartesian", [](const Graph& g, int k, std::uint64_t nodes) {
        const RainbowResult r = min_rainbow_via_cartesian(g, k, budget(nodes));
        return py::make_tuple(r.value, to_py(r.witness));
      }, py::arg("g"), py::arg("k"), py::arg("budget") = default_budget);
  m.def("is_k_rainbow_dominating", [](const Graph& g, const Labels& labels, int k) {
        const RdfCheck c = is_k_rainbow_dominating(g, from_py(labels, k));
        return py::make_tuple(c.valid, c.violator ? py::object(py::int_(*c.violator)) : py::object(py::none()));
      }, py::arg("g"), py::arg("labels"), py::arg("k"));
  m.def("enumerate_min_rdfs", [](const Graph& g, int k, std::size_t cap) {
        const Enumeration e = enumerate_min_rdfs(g, k, cap);
        std::vector<Labels> all;
        for (const auto& f : e.labelings) all.push_back(to_py(f));
        return py::make_tuple(e.weight, all, e.complete);
      }, py::arg("g"), py::arg("k") = 2, py::arg("cap") = 100000);
  m.def("min_couple_cost", [](const Graph& g, int cost_a, int cost_b) {
        const CoupleResult r = min_couple_cost(g, cost_a, cost_b);
        return py::make_tuple(r.value, r.couple.a.members(), r.couple.b.members());
      }, py::arg("g"), py::arg("cost_a"), py::arg("cost_b"));
  m.def("pair_witness", [](const Graph& h) -> py::object {
        const auto p = pair_witness(h);
        if (!p) return py::none();
        return py::make_tuple(p->u, p->v ? py::object(py::int_(*p->v)) : py::object(py::none()), to_py(p->labeling));
      }, py::arg("h"));

  m.def("general_bounds", [](const Graph& g, int k) {
        const Interval i = general_bounds(g, k);
        return py::make_tuple(i.lo, i.hi);
      }, py::arg("g"), py::arg("k"));
  m.def("classify_h", [](const Graph& h) { return std::string(to_string(classify_h(h).tag)); }, py::arg("h"));
  m.def("certify_rd_lex", [](const Graph& g, const Graph& h, std::uint64_t exact_budget, bool strict) {
        return certificate_dict(certify_rd_lex(g, h, CertifyOptions{SolverOptions{}, exact_budget, strict}));
      }, py::arg("g"), py::arg("h"), py::arg("exact_budget") = 0, py::arg("strict") = false);
  m.def("verify_corpus", [](int ng_max, const std::vector<std::string>& hs, int cap, int workers) {
        std::vector<NamedGraph> named;
        for (const auto& s : hs) named.push_back({s, load_graph(s)});
        VerifyOptions options;
        options.workers = workers;
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = verify_corpus(ng_max, named, cap, options);
        }
        return py::module_::import("json").attr("loads")(report_json(report));
      }, py::arg("ng_max"), py::arg("hs"), py::arg("cap"), py::arg("workers") = 1);

  m.def("path_upper_bound", &path_upper_bound, py::arg("n"));
  m.def("path_pattern_labeling", [](int n, const Graph& h) {
        const auto p = pair_witness(h);
        if (!p || !p->v) throw Error(ErrorCode::NoPairWitness, "H has no pair witness");
        return to_py(path_pattern_labeling(n, h, *p));
      }, py::arg("n"), py::arg("h"));
  m.def("glued_family_labeling", [](int mm, int p2, const Graph& h) {
        const auto p = pair_witness(h);
        if (!p || !p->v) throw Error(ErrorCode::NoPairWitness, "H has no pair witness");
        return to_py(glued_family_labeling(mm, p2, h, *p));
      }, py::arg("m"), py::arg("p2"), py::arg("h"));
}
