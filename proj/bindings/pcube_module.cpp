// Python bindings for the partial-cube toolkit. Graphs cross the boundary
// as (vertices, edges) lists; structured results come back as dicts keyed
// by vertex labels.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcube/constructions.hpp"
#include "pcube/dimensions.hpp"
#include "pcube/isomorphism.hpp"
#include "pcube/recognition.hpp"
#include "pcube/relations.hpp"
#include "pcube/set_family.hpp"

namespace py = pybind11;
using namespace pcube;

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

Graph make_graph(const std::vector<std::string>& vertices, const EdgeList& edges) {
    return Graph::build(vertices, edges);
}

py::tuple graph_out(const Graph& g) {
    EdgeList edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(g.label(u), g.label(v));
    return py::make_tuple(g.labels(), edges);
}

py::dict embedding_out(const Graph& g, const HypercubeEmbedding& emb) {
    py::dict assignment;
    for (int v = 0; v < g.vertex_count(); ++v) {
        py::list set;
        for (int c : emb.assignment[v]) set.append(emb.label_set[c]);
        assignment[py::cast(g.label(v))] = set;
    }
    py::dict out;
    out["labels"] = emb.label_set;
    out["assignment"] = assignment;
    return out;
}

SetFamily make_family(const std::vector<std::string>& ground,
                      const std::vector<std::vector<std::string>>& sets) {
    return SetFamily::build(ground, sets);
}

} // namespace

PYBIND11_MODULE(_pcube, m) {
    m.doc() = "partial cube structure toolkit";

    py::register_exception<Error>(m, "PcubeError");

    m.def("recognize", [](const std::vector<std::string>& vs, const EdgeList& es) {
        Graph g = make_graph(vs, es);
        auto report = recognize(g);
        py::dict out;
        out["is_partial_cube"] = report.is_partial_cube;
        if (report.witness) {
            py::dict w;
            if (report.witness->kind == RecognitionWitness::Kind::NotBipartite) {
                w["kind"] = "NotBipartite";
                py::list walk;
                for (int v : report.witness->odd_walk) walk.append(g.label(v));
                w["odd_walk"] = walk;
            } else {
                w["kind"] = "NonConvexSemicube";
                w["edge"] = py::make_tuple(g.label(report.witness->edge.first),
                                           g.label(report.witness->edge.second));
                w["triple"] = py::make_tuple(g.label(report.witness->x),
                                             g.label(report.witness->y),
                                             g.label(report.witness->z));
            }
            out["witness"] = w;
        }
        if (report.embedding) out["embedding"] = embedding_out(g, *report.embedding);
        return out;
    });

    m.def("isometric_dimension", [](const std::vector<std::string>& vs, const EdgeList& es) {
        return isometric_dimension(make_graph(vs, es));
    });

    m.def("lattice_dimension", [](const std::vector<std::string>& vs, const EdgeList& es) {
        return lattice_dimension(make_graph(vs, es));
    });

    m.def("embed_hypercube", [](const std::vector<std::string>& vs, const EdgeList& es) {
        Graph g = make_graph(vs, es);
        return embedding_out(g, embed_hypercube(g));
    });

    m.def("lattice_embedding", [](const std::vector<std::string>& vs, const EdgeList& es) {
        Graph g = make_graph(vs, es);
        auto emb = lattice_embedding(g);
        py::dict coords;
        for (int v = 0; v < g.vertex_count(); ++v)
            coords[py::cast(g.label(v))] = emb.coords[v];
        py::dict out;
        out["dimension"] = emb.dimension;
        out["coords"] = coords;
        return out;
    });

    m.def("theta_classes", [](const std::vector<std::string>& vs, const EdgeList& es) {
        Graph g = make_graph(vs, es);
        auto tp = theta_partition(g);
        py::list classes;
        for (const auto& cls : tp.classes) {
            py::list edges;
            for (int ei : cls) {
                auto [u, v] = g.edges()[ei];
                edges.append(py::make_tuple(g.label(u), g.label(v)));
            }
            classes.append(edges);
        }
        py::dict out;
        out["classes"] = classes;
        out["is_equivalence"] = tp.is_equivalence;
        return out;
    });

    m.def("cartesian_product",
          [](const std::vector<std::string>& vs1, const EdgeList& es1,
             const std::vector<std::string>& vs2, const EdgeList& es2) {
              return graph_out(cartesian_product(make_graph(vs1, es1), make_graph(vs2, es2)));
          });

    m.def("vertex_paste",
          [](const std::vector<std::string>& vs1, const EdgeList& es1, const std::string& a1,
             const std::vector<std::string>& vs2, const EdgeList& es2, const std::string& a2) {
              return graph_out(vertex_paste(make_graph(vs1, es1), a1, make_graph(vs2, es2), a2));
          });

    m.def("edge_paste",
          [](const std::vector<std::string>& vs1, const EdgeList& es1, const std::string& a1,
             const std::string& b1, const std::vector<std::string>& vs2, const EdgeList& es2,
             const std::string& a2, const std::string& b2) {
              return graph_out(
                  edge_paste(make_graph(vs1, es1), a1, b1, make_graph(vs2, es2), a2, b2));
          });

    m.def("expand", [](const std::vector<std::string>& vs, const EdgeList& es,
                       const std::vector<std::string>& v1, const std::vector<std::string>& v2) {
        return graph_out(expand(make_graph(vs, es), ExpansionSpec{v1, v2}));
    });

    m.def("contract", [](const std::vector<std::string>& vs, const EdgeList& es,
                         const std::string& a, const std::string& b) {
        Graph g = make_graph(vs, es);
        return graph_out(contract(g, g.index_of(a), g.index_of(b)));
    });

    m.def("expansion_sequence", [](const std::vector<std::string>& vs, const EdgeList& es) {
        auto seq = expansion_sequence(make_graph(vs, es));
        py::list steps;
        for (const auto& step : seq.steps) {
            py::dict js;
            js["v1"] = step.spec.v1;
            js["v2"] = step.spec.v2;
            js["result_size"] = step.result_size;
            steps.append(js);
        }
        py::dict out;
        out["base"] = seq.base_label;
        out["steps"] = steps;
        return out;
    });

    m.def("is_well_graded", [](const std::vector<std::string>& ground,
                               const std::vector<std::vector<std::string>>& sets) {
        SetFamily fam = make_family(ground, sets);
        auto result = is_well_graded(fam);
        py::dict out;
        out["well_graded"] = result.well_graded;
        if (!result.well_graded)
            out["witness"] = py::make_tuple(fam.member_elements(result.witness.first),
                                            fam.member_elements(result.witness.second));
        return out;
    });

    m.def("family_graph", [](const std::vector<std::string>& ground,
                             const std::vector<std::vector<std::string>>& sets) {
        return graph_out(family_graph(make_family(ground, sets)));
    });

    m.def("retraction", [](const std::vector<std::string>& ground,
                           const std::vector<std::vector<std::string>>& sets) {
        SetFamily out = retraction(make_family(ground, sets));
        std::vector<std::vector<std::string>> members;
        for (int i = 0; i < out.size(); ++i) members.push_back(out.member_elements(i));
        return py::make_tuple(out.ground(), members);
    });

    m.def("isomorphic",
          [](const std::vector<std::string>& vs1, const EdgeList& es1,
             const std::vector<std::string>& vs2, const EdgeList& es2) {
              return isomorphic(make_graph(vs1, es1), make_graph(vs2, es2));
          });
}
