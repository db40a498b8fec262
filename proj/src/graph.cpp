#include "pcube/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace pcube {

namespace {
long long edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * 1000003LL + v;
}
} // namespace

Graph Graph::build(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    g.labels_ = vertices;
    g.index_.reserve(vertices.size());
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        if (!g.index_.emplace(vertices[i], i).second)
            throw Error("DuplicateVertex", "duplicate vertex label: " + vertices[i]);
    }
    g.edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = g.index_.find(a);
        auto ib = g.index_.find(b);
        if (ia == g.index_.end())
            throw Error("UnknownEndpoint", "edge endpoint not declared: " + a);
        if (ib == g.index_.end())
            throw Error("UnknownEndpoint", "edge endpoint not declared: " + b);
        int u = ia->second, v = ib->second;
        if (u == v) throw Error("SelfLoop", "self-loop at vertex: " + a);
        if (g.edge_index_.count(edge_key(u, v)))
            throw Error("DuplicateEdge", "duplicate edge: " + a + " " + b);
        g.edge_index_.emplace(edge_key(u, v), static_cast<int>(g.edges_.size()));
        g.edges_.push_back(make_edge(u, v));
    }
    g.finish_construction();
    return g;
}

Graph Graph::build_indexed(int n, const std::vector<Edge>& edges) {
    Graph g;
    g.labels_.reserve(n);
    for (int i = 0; i < n; ++i) g.labels_.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i) g.index_.emplace(g.labels_[i], i);
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("UnknownEndpoint", "edge endpoint out of range");
        if (u == v) throw Error("SelfLoop", "self-loop at vertex " + std::to_string(u));
        if (g.edge_index_.count(edge_key(u, v)))
            throw Error("DuplicateEdge", "duplicate edge");
        g.edge_index_.emplace(edge_key(u, v), static_cast<int>(g.edges_.size()));
        g.edges_.push_back(make_edge(u, v));
    }
    g.finish_construction();
    return g;
}

void Graph::finish_construction() {
    const int n = vertex_count();
    adj_.assign(n, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    dist_.assign(n, std::vector<int>(n, -1));
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        auto& row = dist_[s];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : adj_[u]) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

int Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw Error("UnknownVertex", "unknown vertex: " + label);
    return it->second;
}

std::optional<int> Graph::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Graph::edge_index(int u, int v) const {
    auto it = edge_index_.find(edge_key(u, v));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::is_connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    for (int v = 0; v < n; ++v)
        if (dist_[0][v] < 0) return false;
    return true;
}

BipartiteResult Graph::bipartite() const {
    const int n = vertex_count();
    std::vector<int> color(n, -1), parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj_[u]) {
                if (color[w] < 0) {
                    color[w] = color[u] ^ 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Odd closed walk: up from u and w to the root of the
                    // BFS tree, glued at the conflicting edge.
                    std::vector<int> up_u, up_w;
                    for (int x = u; x >= 0; x = parent[x]) up_u.push_back(x);
                    for (int x = w; x >= 0; x = parent[x]) up_w.push_back(x);
                    std::vector<int> walk(up_u.rbegin(), up_u.rend());
                    walk.insert(walk.end(), up_w.begin(), up_w.end());
                    return {false, walk};
                }
            }
        }
    }
    return {true, {}};
}

Graph Graph::induced(const std::vector<int>& keep) const {
    const int n = vertex_count();
    std::vector<char> mask(n, 0);
    for (int v : keep) {
        if (v < 0 || v >= n)
            throw Error("UnknownVertex", "vertex index out of range");
        mask[v] = 1;
    }
    std::vector<std::string> vs;
    for (int v = 0; v < n; ++v)
        if (mask[v]) vs.push_back(labels_[v]);
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : edges_)
        if (mask[u] && mask[v]) es.emplace_back(labels_[u], labels_[v]);
    return build(vs, es);
}

bool Graph::is_isometric_subset(const std::vector<int>& keep) const {
    Graph h = induced(keep);
    if (!h.is_connected())
        throw Error("DisconnectedSubset", "induced subgraph is not connected");
    for (int i = 0; i < h.vertex_count(); ++i) {
        int gi = index_of(h.label(i));
        for (int j = i + 1; j < h.vertex_count(); ++j) {
            int gj = index_of(h.label(j));
            if (h.dist(i, j) != dist_[gi][gj]) return false;
        }
    }
    return true;
}

bool Graph::is_convex_subset(const std::vector<int>& keep) const {
    const int n = vertex_count();
    std::vector<char> mask(n, 0);
    for (int v : keep) {
        if (v < 0 || v >= n)
            throw Error("UnknownVertex", "vertex index out of range");
        mask[v] = 1;
    }
    for (int x : keep)
        for (int y : keep) {
            if (x >= y || dist_[x][y] < 0) continue;
            for (int z = 0; z < n; ++z) {
                if (mask[z] || dist_[x][z] < 0 || dist_[z][y] < 0) continue;
                if (dist_[x][z] + dist_[z][y] == dist_[x][y]) return false;
            }
        }
    return true;
}

} // namespace pcube
