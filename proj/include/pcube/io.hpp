#ifndef PCUBE_IO_HPP
#define PCUBE_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "pcube/constructions.hpp"
#include "pcube/dimensions.hpp"
#include "pcube/graph.hpp"
#include "pcube/recognition.hpp"
#include "pcube/relations.hpp"
#include "pcube/set_family.hpp"

namespace pcube::io {

// Graph document: {"vertices":["v",...],"edges":[["u","v"],...]}.
// Throws ParseError on malformed input.
Graph graph_from_json(const nlohmann::json& doc);
Graph graph_from_string(const std::string& text);
Graph graph_from_file(const std::string& path);
nlohmann::json graph_to_json(const Graph& g);

// Family document: {"ground":["a",...],"sets":[["a","b"],...]}.
SetFamily family_from_json(const nlohmann::json& doc);
SetFamily family_from_file(const std::string& path);
nlohmann::json family_to_json(const SetFamily& fam);

nlohmann::json embedding_to_json(const Graph& g, const HypercubeEmbedding& emb);
nlohmann::json lattice_embedding_to_json(const Graph& g, const LatticeEmbedding& emb);
nlohmann::json recognition_to_json(const Graph& g, const RecognitionReport& report);
nlohmann::json theta_to_json(const Graph& g, const ThetaPartition& tp);
nlohmann::json sequence_to_json(const ExpansionSequence& seq);
ExpansionSpec spec_from_json(const nlohmann::json& doc);

// Key-sorted, newline-terminated serialization used by the CLI.
std::string dump(const nlohmann::json& doc);

// DOT export; works on disconnected graphs. With theta_colors, edges of
// one theta class share a color (requires a connected graph).
std::string to_dot(const Graph& g, bool theta_colors);

} // namespace pcube::io

#endif
