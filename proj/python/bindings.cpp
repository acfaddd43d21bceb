#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperdom/harness.hpp"
#include "hyperdom/io.hpp"
#include "hyperdom/iso.hpp"
#include "hyperdom/reductions.hpp"
#include "hyperdom/solvers.hpp"

namespace py = pybind11;
using namespace hyperdom;

namespace {

using EdgeList = std::vector<std::vector<VertexId>>;

EdgeList edge_lists(const Hypergraph& h) {
    EdgeList out;
    for (Edge e : h.edges()) out.push_back(e.members());
    return out;
}

py::dict witness_dict(const InvariantWitness& w) {
    py::dict d;
    d["kind"] = std::string(to_string(w.kind));
    d["value"] = w.value;
    if (w.kind == InvariantKind::Domination || w.kind == InvariantKind::Transversal) {
        d["vertices"] = w.vertices.members();
    } else {
        EdgeList edges;
        for (Edge e : w.edges) edges.push_back(e.members());
        d["edges"] = edges;
    }
    return d;
}

InvariantKind kind_from_name(const std::string& name) {
    if (name == "gamma") return InvariantKind::Domination;
    if (name == "tau") return InvariantKind::Transversal;
    if (name == "alpha") return InvariantKind::Matching;
    if (name == "qd") return InvariantKind::Quasidegree;
    throw Error(ErrorCode::UnknownName, "no invariant named '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact domination invariants for small hypergraphs";

    static py::exception<Error> error_type(m, "HyperdomError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init([](int n, const EdgeList& edges) { return Hypergraph::from_lists(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Hypergraph::num_vertices)
        .def_property_readonly("m", &Hypergraph::num_edges)
        .def_property_readonly("edges", &edge_lists)
        .def("degree", [](const Hypergraph& h, VertexId v) { return degree(h, v); })
        .def("rank", [](const Hypergraph& h) { return rank(h); })
        .def("is_linear", [](const Hypergraph& h) { return is_linear(h); })
        .def("is_intersecting", [](const Hypergraph& h) { return is_intersecting(h); })
        .def("is_uniform", [](const Hypergraph& h, int r) { return is_uniform(h, r); })
        .def(py::self == py::self)
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(" + std::to_string(h.num_vertices()) + ", " + std::to_string(h.num_edges()) + " edges)";
        })
        .def("__str__", [](const Hypergraph& h) { return write(h); });

    m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
    m.def("write", [](const Hypergraph& h) { return write(h); }, py::arg("h"));
    m.def("load", &load_input, py::arg("name_or_path"));
    m.def("generate", [](const std::string& name) { return generate(parse_construction_name(name)).graph; },
          py::arg("name"));
    m.def("construction_names", [] {
        std::vector<std::string> out;
        for (auto n : {ConstructionName::Fano, ConstructionName::FanoMinus, ConstructionName::F1,
                       ConstructionName::F1Minus, ConstructionName::F2, ConstructionName::F3}) {
            out.emplace_back(to_string(n));
        }
        return out;
    });
    m.def("random_hypergraph", &random_hypergraph, py::arg("r"), py::arg("n"), py::arg("m"), py::arg("seed"));

    m.def("domination_number", [](const Hypergraph& h) { return witness_dict(domination_number(h)); });
    m.def("transversal_number", [](const Hypergraph& h) { return witness_dict(transversal_number(h)); });
    m.def("matching_number", [](const Hypergraph& h) { return witness_dict(matching_number(h)); });
    m.def("quasidegree", [](const Hypergraph& h, VertexId v) { return witness_dict(quasidegree(h, v)); },
          py::arg("h"), py::arg("v"));
    m.def("brute_force", [](const Hypergraph& h, const std::string& kind, VertexId focus) {
        return witness_dict(brute_force_invariant(h, kind_from_name(kind), focus));
    }, py::arg("h"), py::arg("kind"), py::arg("focus") = 0);

    m.def("canonical_code", [](const Hypergraph& h) { return canonical_form(h).code.to_string(); });
    m.def("is_isomorphic", &is_isomorphic);
    m.def("find_isomorphism", [](const Hypergraph& a, const Hypergraph& b) -> std::optional<std::vector<VertexId>> {
        auto map = find_isomorphism(a, b);
        if (!map) return std::nullopt;
        return std::vector<VertexId>(map->begin() + 1, map->end());
    });

    m.def("reduce_json", [](const Hypergraph& h) {
        return to_json(shrink_to_hprime(peel_to_hstar(h))).dump();
    });
    m.def("lemma_report_json", [](const Hypergraph& h, int r) { return to_json(reduction_report(h, r)).dump(); },
          py::arg("h"), py::arg("r") = 4);
    m.def("verify_bound_json", [](int r, int trials, std::uint64_t seed) {
        py::gil_scoped_release release;
        return verify_bound(r, trials, seed).to_json(false).dump();
    }, py::arg("r"), py::arg("trials") = kDefaultTrials, py::arg("seed") = kDefaultSeed);
    m.def("verify_all_json", [](std::uint64_t seed, int trials) {
        py::gil_scoped_release release;
        VerifyAllOptions opts;
        opts.seed = seed;
        opts.trials = trials;
        return verify_all(opts).to_json(false).dump();
    }, py::arg("seed") = kDefaultSeed, py::arg("trials") = kDefaultTrials);
}
