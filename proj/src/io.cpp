#include "pcube/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pcube::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw Error("ParseError", "input is not valid JSON");
    return doc;
}

std::vector<std::string> string_list(const json& value, const char* what) {
    if (!value.is_array())
        throw Error("ParseError", std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string())
            throw Error("ParseError", std::string(what) + " entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("ParseError", "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

Graph graph_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw Error("ParseError", "graph document needs \"vertices\" and \"edges\"");
    auto vertices = string_list(doc["vertices"], "\"vertices\"");
    if (!doc["edges"].is_array())
        throw Error("ParseError", "\"edges\" must be an array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw Error("ParseError", "each edge must be a pair of vertex labels");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::build(vertices, edges);
}

Graph graph_from_string(const std::string& text) { return graph_from_json(parse(text)); }

Graph graph_from_file(const std::string& path) {
    return graph_from_json(parse(read_file(path)));
}

json graph_to_json(const Graph& g) {
    json doc;
    doc["vertices"] = g.labels();
    doc["edges"] = json::array();
    for (const auto& [u, v] : g.edges())
        doc["edges"].push_back({g.label(u), g.label(v)});
    return doc;
}

SetFamily family_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("ground") || !doc.contains("sets"))
        throw Error("ParseError", "family document needs \"ground\" and \"sets\"");
    auto ground = string_list(doc["ground"], "\"ground\"");
    if (!doc["sets"].is_array())
        throw Error("ParseError", "\"sets\" must be an array");
    std::vector<std::vector<std::string>> sets;
    for (const auto& s : doc["sets"]) sets.push_back(string_list(s, "set"));
    return SetFamily::build(ground, sets);
}

SetFamily family_from_file(const std::string& path) {
    return family_from_json(parse(read_file(path)));
}

json family_to_json(const SetFamily& fam) {
    json doc;
    doc["ground"] = fam.ground();
    doc["sets"] = json::array();
    for (int i = 0; i < fam.size(); ++i) doc["sets"].push_back(fam.member_elements(i));
    return doc;
}

json embedding_to_json(const Graph& g, const HypercubeEmbedding& emb) {
    json doc;
    doc["labels"] = emb.label_set;
    json assignment = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
        json set = json::array();
        for (int c : emb.assignment[v]) set.push_back(emb.label_set[c]);
        assignment[g.label(v)] = set;
    }
    doc["assignment"] = assignment;
    return doc;
}

json lattice_embedding_to_json(const Graph& g, const LatticeEmbedding& emb) {
    json doc;
    doc["dimension"] = emb.dimension;
    json coords = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) coords[g.label(v)] = emb.coords[v];
    doc["coords"] = coords;
    return doc;
}

json recognition_to_json(const Graph& g, const RecognitionReport& report) {
    json doc;
    doc["is_partial_cube"] = report.is_partial_cube;
    if (report.witness) {
        const auto& w = *report.witness;
        json jw;
        if (w.kind == RecognitionWitness::Kind::NotBipartite) {
            jw["kind"] = "NotBipartite";
            json walk = json::array();
            for (int v : w.odd_walk) walk.push_back(g.label(v));
            jw["odd_walk"] = walk;
        } else {
            jw["kind"] = "NonConvexSemicube";
            jw["edge"] = {g.label(w.edge.first), g.label(w.edge.second)};
            jw["triple"] = {g.label(w.x), g.label(w.y), g.label(w.z)};
        }
        doc["witness"] = jw;
    }
    if (report.embedding)
        doc["embedding"] = embedding_to_json(g, *report.embedding);
    return doc;
}

json theta_to_json(const Graph& g, const ThetaPartition& tp) {
    json doc;
    doc["is_equivalence"] = tp.is_equivalence;
    json classes = json::array();
    for (const auto& cls : tp.classes) {
        json edges = json::array();
        for (int ei : cls) {
            auto [u, v] = g.edges()[ei];
            edges.push_back({g.label(u), g.label(v)});
        }
        classes.push_back(edges);
    }
    doc["classes"] = classes;
    return doc;
}

json sequence_to_json(const ExpansionSequence& seq) {
    json doc;
    doc["base"] = seq.base_label;
    json steps = json::array();
    for (const auto& step : seq.steps) {
        json js;
        js["v1"] = step.spec.v1;
        js["v2"] = step.spec.v2;
        js["result_size"] = step.result_size;
        steps.push_back(js);
    }
    doc["steps"] = steps;
    return doc;
}

ExpansionSpec spec_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("v1") || !doc.contains("v2"))
        throw Error("ParseError", "expansion step needs \"v1\" and \"v2\"");
    ExpansionSpec spec;
    spec.v1 = string_list(doc["v1"], "\"v1\"");
    spec.v2 = string_list(doc["v2"], "\"v2\"");
    return spec;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string to_dot(const Graph& g, bool theta_colors) {
    static const char* palette[] = {"red",      "blue",   "green",  "orange",
                                    "purple",   "brown",  "cyan",   "magenta",
                                    "darkgreen", "navy",  "gold",   "gray"};
    constexpr int palette_size = 12;

    std::vector<int> class_of(g.edge_count(), -1);
    if (theta_colors) {
        auto tp = theta_partition(g); // throws Disconnected
        for (int c = 0; c < static_cast<int>(tp.classes.size()); ++c)
            for (int ei : tp.classes[c]) class_of[ei] = c;
    }

    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& label : g.labels()) out << "  \"" << label << "\";\n";
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        auto [u, v] = g.edges()[ei];
        out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\"";
        if (theta_colors)
            out << " [color=" << palette[class_of[ei] % palette_size]
                << ", label=\"c" << class_of[ei] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace pcube::io
