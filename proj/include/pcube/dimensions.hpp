#ifndef PCUBE_DIMENSIONS_HPP
#define PCUBE_DIMENSIONS_HPP

#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

// Number of theta classes. Throws NotPartialCube, Disconnected, EmptyGraph.
int isometric_dimension(const Graph& g);

// Nodes are the distinct semicubes (as sorted vertex sets); two nodes are
// linked when their union is V and their intersection is nonempty.
// opposite[i] is the node holding the complement of node i.
struct SemicubeGraph {
    std::vector<std::vector<int>> nodes;
    // Directed edges (a, b) of the underlying graph whose semicube W_ab
    // equals the node, one entry per node (the first in edge order).
    std::vector<Edge> defining_edges;
    std::vector<std::pair<int, int>> links;
    std::vector<int> opposite;
};

SemicubeGraph semicube_graph(const Graph& g);

// Maximum-cardinality matching on the links, as pairs of node indices.
// Deterministic (Edmonds blossom with lowest-index scanning order).
std::vector<std::pair<int, int>> maximum_matching(const SemicubeGraph& sg);

// dim_I minus the maximum matching size of the semicube graph.
int lattice_dimension(const Graph& g);

struct LatticeEmbedding {
    int dimension = 0;
    std::vector<std::vector<int>> coords; // one integer vector per vertex
};

// Isometric l1 embedding into Z^dim with dim = lattice_dimension(g).
// The result is verified before returning; throws
// EmbeddingVerificationFailed if no verified assignment is found.
LatticeEmbedding lattice_embedding(const Graph& g);

} // namespace pcube

#endif
