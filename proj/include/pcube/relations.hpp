#ifndef PCUBE_RELATIONS_HPP
#define PCUBE_RELATIONS_HPP

#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

// Semicubes of an edge ab: the vertices strictly closer to a than to b,
// and the opposite set. The pair (a, b) is ordered; the sets are sorted
// vertex indices.
struct SemicubePair {
    int a = -1, b = -1;
    std::vector<int> w_ab;
    std::vector<int> w_ba;
};

// Partition of the edge set into classes of the transitive closure of the
// Djokovic relation. Classes hold edge indices into Graph::edges().
// is_equivalence is false when taking the closure added pairs, i.e. the
// raw relation was not transitive.
struct ThetaPartition {
    std::vector<std::vector<int>> classes;
    bool is_equivalence = true;
};

struct FundamentalSets {
    SemicubePair semicubes;
    std::vector<int> f_ab; // edge indices of the theta class of ab
    std::vector<int> u_ab; // members of w_ab with a neighbor in w_ba
    std::vector<int> u_ba;
};

// Throws NotAnEdge / Disconnected.
SemicubePair semicube(const Graph& g, int a, int b);

bool djokovic_related(const Graph& g, Edge e, Edge f);
bool winkler_related(const Graph& g, Edge e, Edge f);

ThetaPartition theta_partition(const Graph& g);

FundamentalSets fundamental_sets(const Graph& g, int a, int b);

} // namespace pcube

#endif
