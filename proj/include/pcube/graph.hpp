#ifndef PCUBE_GRAPH_HPP
#define PCUBE_GRAPH_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcube/error.hpp"

namespace pcube {

/// Unordered edge, stored with min index first.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

struct BipartiteResult {
    bool bipartite = false;
    // When not bipartite: a closed walk of odd length, as vertex indices
    // (first == last).
    std::vector<int> odd_walk;
};

// Finite simple undirected graph. Immutable after construction; the
// all-pairs BFS distance matrix is computed eagerly and cached.
class Graph {
public:
    // Empty graph.
    Graph() = default;

    // Validating constructor from labels. Throws DuplicateVertex,
    // UnknownEndpoint, SelfLoop, DuplicateEdge.
    static Graph build(const std::vector<std::string>& vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges);

    // Fast path for generated corpora: n vertices labeled "0".."n-1",
    // edges as index pairs. Validation still applies.
    static Graph build_indexed(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }

    // Throws UnknownVertex.
    int index_of(const std::string& label) const;
    std::optional<int> find(const std::string& label) const;

    // Edges in input order; each pair has min index first.
    const std::vector<Edge>& edges() const { return edges_; }
    // Index into edges(), or nullopt.
    std::optional<int> edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Hop distance; -1 for unreachable pairs.
    int dist(int u, int v) const { return dist_[u][v]; }
    const std::vector<std::vector<int>>& distance_matrix() const { return dist_; }

    bool is_connected() const;
    BipartiteResult bipartite() const;

    // Subgraph induced by `keep`; vertex labels are preserved, order follows
    // this graph's vertex order. Throws UnknownVertex on out-of-range index.
    Graph induced(const std::vector<int>& keep) const;

    // True iff distances inside <keep> match distances in this graph.
    // Throws DisconnectedSubset if <keep> is not connected.
    bool is_isometric_subset(const std::vector<int>& keep) const;

    // True iff every vertex metrically between two members is a member.
    bool is_convex_subset(const std::vector<int>& keep) const;

private:
    void finish_construction();

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::unordered_map<long long, int> edge_index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> dist_;
};

} // namespace pcube

#endif
