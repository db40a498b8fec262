#ifndef PCUBE_CONSTRUCTIONS_HPP
#define PCUBE_CONSTRUCTIONS_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

// Two isometric covering subgraphs with nonempty intersection, given by
// vertex labels of the base graph.
struct ExpansionSpec {
    std::vector<std::string> v1;
    std::vector<std::string> v2;
};

struct ExpansionStep {
    ExpansionSpec spec;
    int result_size = 0; // |v1| + |v2|
};

// Vertex labels of the product are "(x|y)".
Graph cartesian_product(const Graph& g1, const Graph& g2);

// Labels "1:x" / "2:y"; the identified vertex keeps its G1 name "1:a1".
// Throws UnknownVertex, Disconnected.
Graph vertex_paste(const Graph& g1, const std::string& a1,
                   const Graph& g2, const std::string& a2);

// Throws NotAnEdge, Disconnected.
Graph edge_paste(const Graph& g1, const std::string& a1, const std::string& b1,
                 const Graph& g2, const std::string& a2, const std::string& b2);

// Labels "x^1" / "x^2", with matching edges x^1x^2 over the intersection.
// Throws NotCovering, NotIsometricSubgraph, EmptyIntersection, UnknownVertex.
Graph expand(const Graph& g, const ExpansionSpec& spec);

// Result of contracting along an edge: the pasted graph plus the vertex
// projection (old label -> new label) and the two semicube label sets.
struct ContractionResult {
    Graph graph;
    std::unordered_map<std::string, std::string> projection;
    std::vector<std::string> w_ab;
    std::vector<std::string> w_ba;
};

// Throws NotAnEdge, NonConvexSemicube, NotAPartition, MatchingNotIsomorphism.
ContractionResult contract_detailed(const Graph& g, int a, int b);
Graph contract(const Graph& g, int a, int b);

// Expansion steps replaying from K_1 to a graph isomorphic to g. Each
// step's vertex sets are expressed in the labels of the graph obtained by
// applying the previous steps, so the list replays literally via expand()
// starting from the single-vertex graph labeled base_label.
// Throws NotPartialCube.
struct ExpansionSequence {
    std::string base_label;
    std::vector<ExpansionStep> steps;
};

ExpansionSequence expansion_sequence(const Graph& g);

} // namespace pcube

#endif
