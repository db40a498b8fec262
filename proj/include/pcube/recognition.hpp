#ifndef PCUBE_RECOGNITION_HPP
#define PCUBE_RECOGNITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/relations.hpp"

namespace pcube {

// Isometric assignment of vertices to subsets of a label set, one label
// per theta class. assignment[v] holds sorted indices into label_set.
struct HypercubeEmbedding {
    std::vector<std::string> label_set;
    std::vector<std::vector<int>> assignment;
};

struct RecognitionWitness {
    enum class Kind { NotBipartite, NonConvexSemicube };
    Kind kind = Kind::NotBipartite;
    // NotBipartite: odd closed walk (vertex indices).
    std::vector<int> odd_walk;
    // NonConvexSemicube: the defining edge and a triple (x, y, z) with
    // x, y inside the semicube and z strictly between them outside it.
    Edge edge{-1, -1};
    int x = -1, y = -1, z = -1;
};

struct RecognitionReport {
    bool is_partial_cube = false;
    std::optional<RecognitionWitness> witness;
    std::optional<HypercubeEmbedding> embedding;
};

// Checks bipartiteness, then convexity of both semicubes of every edge;
// builds the embedding on success. Throws Disconnected, EmptyGraph.
RecognitionReport recognize(const Graph& g);

// Canonical embedding: one label per theta class ("c0", "c1", ... ordered
// by the smallest edge in each class); the first vertex maps to the empty
// set. Throws NotPartialCube when the result fails verification.
HypercubeEmbedding embed_hypercube(const Graph& g);

// True iff Hamming distances of the assignment match graph distances on
// every vertex pair. Throws VertexMismatch when the assignment does not
// cover exactly the vertices of g.
bool verify_embedding(const Graph& g, const HypercubeEmbedding& emb);

struct RectangleResult {
    bool ok = true;
    Edge base_edge{-1, -1};
    // Violating pair of theta-class edges (x, y, u, v) with x, u on the
    // a-side of the base edge.
    int x = -1, y = -1, u = -1, v = -1;
};

// Theta-class rectangle condition; equivalent to partial-cube recognition
// on bipartite inputs. Throws NotBipartite, Disconnected.
RectangleResult rectangle_check(const Graph& g);

} // namespace pcube

#endif
