// pcube: partial-cube structure toolkit command line.
//
// Exit codes: 0 success / domain-positive, 1 domain-negative or domain
// error, 2 parse or I/O error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pcube/constructions.hpp"
#include "pcube/dimensions.hpp"
#include "pcube/io.hpp"
#include "pcube/isomorphism.hpp"
#include "pcube/recognition.hpp"
#include "pcube/relations.hpp"
#include "pcube/set_family.hpp"

using nlohmann::json;
using namespace pcube;

namespace {

void emit(const json& doc) { std::cout << io::dump(doc); }

int fail(const Error& err) {
    json doc;
    doc["error"] = err.code();
    doc["message"] = err.what();
    emit(doc);
    return err.code() == "ParseError" ? 2 : 1;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !text.empty()) out.push_back(cur);
    return out;
}

int cmd_recognize(const std::string& path) {
    Graph g = io::graph_from_file(path);
    auto report = recognize(g);
    json doc = io::recognition_to_json(g, report);
    if (report.is_partial_cube) {
        doc["dim_I"] = isometric_dimension(g);
        doc["dim_Z"] = lattice_dimension(g);
    }
    emit(doc);
    return report.is_partial_cube ? 0 : 1;
}

int cmd_dim(const std::string& path) {
    Graph g = io::graph_from_file(path);
    json doc;
    doc["dim_I"] = isometric_dimension(g);
    doc["dim_Z"] = lattice_dimension(g);
    emit(doc);
    return 0;
}

int cmd_embed(const std::string& path, bool lattice) {
    Graph g = io::graph_from_file(path);
    if (lattice)
        emit(io::lattice_embedding_to_json(g, lattice_embedding(g)));
    else
        emit(io::embedding_to_json(g, embed_hypercube(g)));
    return 0;
}

int cmd_theta(const std::string& path) {
    Graph g = io::graph_from_file(path);
    emit(io::theta_to_json(g, theta_partition(g)));
    return 0;
}

int cmd_family(const std::string& sub, const std::string& path) {
    SetFamily fam = io::family_from_file(path);
    json doc;
    if (sub == "check") {
        auto result = is_well_graded(fam);
        doc["well_graded"] = result.well_graded;
        if (!result.well_graded)
            doc["witness"] = {fam.member_elements(result.witness.first),
                              fam.member_elements(result.witness.second)};
        emit(doc);
        return result.well_graded ? 0 : 1;
    }
    if (sub == "graph") {
        emit(io::graph_to_json(family_graph(fam)));
        return 0;
    }
    emit(io::family_to_json(retraction(fam)));
    return 0;
}

int cmd_sequence(const std::string& path) {
    Graph g = io::graph_from_file(path);
    emit(io::sequence_to_json(expansion_sequence(g)));
    return 0;
}

int cmd_dot(const std::string& path, bool theta_colors) {
    Graph g = io::graph_from_file(path);
    std::cout << io::to_dot(g, theta_colors);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial cube structure toolkit"};
    app.require_subcommand(1);

    std::string file, file2;
    std::string a1, b1, a2, b2, v1_csv, v2_csv;
    bool lattice = false, theta_colors = false;

    auto* recognize_cmd = app.add_subcommand("recognize", "partial-cube recognition report");
    recognize_cmd->add_option("file", file)->required();

    auto* dim_cmd = app.add_subcommand("dim", "isometric and lattice dimensions");
    dim_cmd->add_option("file", file)->required();

    auto* embed_cmd = app.add_subcommand("embed", "hypercube (or lattice) embedding");
    embed_cmd->add_option("file", file)->required();
    embed_cmd->add_flag("--lattice", lattice);

    auto* theta_cmd = app.add_subcommand("theta", "theta classes of the edge set");
    theta_cmd->add_option("file", file)->required();

    std::string family_sub;
    auto* family_cmd = app.add_subcommand("family", "set-family operations");
    family_cmd->add_option("sub", family_sub)
        ->required()
        ->check(CLI::IsMember({"check", "graph", "retract"}));
    family_cmd->add_option("file", file)->required();

    auto* product_cmd = app.add_subcommand("product", "Cartesian product of two graphs");
    product_cmd->add_option("file1", file)->required();
    product_cmd->add_option("file2", file2)->required();

    auto* pv_cmd = app.add_subcommand("paste-vertex", "vertex-pasting of two graphs");
    pv_cmd->add_option("file1", file)->required();
    pv_cmd->add_option("a1", a1)->required();
    pv_cmd->add_option("file2", file2)->required();
    pv_cmd->add_option("a2", a2)->required();

    auto* pe_cmd = app.add_subcommand("paste-edge", "edge-pasting of two graphs");
    pe_cmd->add_option("file1", file)->required();
    pe_cmd->add_option("a1", a1)->required();
    pe_cmd->add_option("b1", b1)->required();
    pe_cmd->add_option("file2", file2)->required();
    pe_cmd->add_option("a2", a2)->required();
    pe_cmd->add_option("b2", b2)->required();

    auto* expand_cmd = app.add_subcommand("expand", "isometric expansion");
    expand_cmd->add_option("file", file)->required();
    expand_cmd->add_option("--v1", v1_csv)->required();
    expand_cmd->add_option("--v2", v2_csv)->required();

    auto* contract_cmd = app.add_subcommand("contract", "contraction along an edge");
    contract_cmd->add_option("file", file)->required();
    contract_cmd->add_option("a", a1)->required();
    contract_cmd->add_option("b", b1)->required();

    auto* sequence_cmd = app.add_subcommand("sequence", "expansion sequence from K_1");
    sequence_cmd->add_option("file", file)->required();

    auto* dot_cmd = app.add_subcommand("dot", "DOT export");
    dot_cmd->add_option("file", file)->required();
    dot_cmd->add_flag("--theta-colors", theta_colors);

    CLI11_PARSE(app, argc, argv);

    try {
        if (recognize_cmd->parsed()) return cmd_recognize(file);
        if (dim_cmd->parsed()) return cmd_dim(file);
        if (embed_cmd->parsed()) return cmd_embed(file, lattice);
        if (theta_cmd->parsed()) return cmd_theta(file);
        if (family_cmd->parsed()) return cmd_family(family_sub, file);
        if (product_cmd->parsed()) {
            emit(io::graph_to_json(
                cartesian_product(io::graph_from_file(file), io::graph_from_file(file2))));
            return 0;
        }
        if (pv_cmd->parsed()) {
            emit(io::graph_to_json(
                vertex_paste(io::graph_from_file(file), a1, io::graph_from_file(file2), a2)));
            return 0;
        }
        if (pe_cmd->parsed()) {
            emit(io::graph_to_json(edge_paste(io::graph_from_file(file), a1, b1,
                                              io::graph_from_file(file2), a2, b2)));
            return 0;
        }
        if (expand_cmd->parsed()) {
            ExpansionSpec spec{split_csv(v1_csv), split_csv(v2_csv)};
            emit(io::graph_to_json(expand(io::graph_from_file(file), spec)));
            return 0;
        }
        if (contract_cmd->parsed()) {
            Graph g = io::graph_from_file(file);
            emit(io::graph_to_json(contract(g, g.index_of(a1), g.index_of(b1))));
            return 0;
        }
        if (sequence_cmd->parsed()) return cmd_sequence(file);
        if (dot_cmd->parsed()) return cmd_dot(file, theta_colors);
    } catch (const Error& err) {
        return fail(err);
    }
    return 2;
}
