#include "pcube/dimensions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "pcube/relations.hpp"

namespace pcube {

namespace {

void require_partial_cube(const Graph& g) {
    if (g.vertex_count() == 0)
        throw Error("EmptyGraph", "operation requires a nonempty graph");
    if (!g.is_connected())
        throw Error("Disconnected", "operation requires a connected graph");
    if (!g.bipartite().bipartite)
        throw Error("NotPartialCube", "graph is not bipartite");
    if (!theta_partition(g).is_equivalence)
        throw Error("NotPartialCube", "theta is not an equivalence relation");
}

} // namespace

int isometric_dimension(const Graph& g) {
    require_partial_cube(g);
    return static_cast<int>(theta_partition(g).classes.size());
}

SemicubeGraph semicube_graph(const Graph& g) {
    require_partial_cube(g);
    const int n = g.vertex_count();

    SemicubeGraph sg;
    std::map<std::vector<int>, int> node_of;

    // Deduplicate semicubes by vertex set, keeping the first defining
    // directed edge in input order.
    for (const auto& [a, b] : g.edges()) {
        auto sc = semicube(g, a, b);
        for (int side = 0; side < 2; ++side) {
            auto& set = side == 0 ? sc.w_ab : sc.w_ba;
            Edge def = side == 0 ? Edge{a, b} : Edge{b, a};
            if (!node_of.count(set)) {
                node_of.emplace(set, static_cast<int>(sg.nodes.size()));
                sg.nodes.push_back(set);
                sg.defining_edges.push_back(def);
            }
        }
    }

    sg.opposite.assign(sg.nodes.size(), -1);
    std::vector<char> mask(n, 0);
    for (size_t i = 0; i < sg.nodes.size(); ++i) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int v : sg.nodes[i]) mask[v] = 1;
        std::vector<int> complement;
        for (int v = 0; v < n; ++v)
            if (!mask[v]) complement.push_back(v);
        auto it = node_of.find(complement);
        sg.opposite[i] = it == node_of.end() ? -1 : it->second;
    }

    for (size_t i = 0; i < sg.nodes.size(); ++i) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int v : sg.nodes[i]) mask[v] = 1;
        for (size_t j = i + 1; j < sg.nodes.size(); ++j) {
            int covered = static_cast<int>(sg.nodes[i].size());
            bool meets = false;
            for (int v : sg.nodes[j]) {
                if (mask[v]) meets = true;
                else ++covered;
            }
            if (covered == n && meets)
                sg.links.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return sg;
}

namespace {

// Edmonds blossom algorithm for maximum cardinality matching on a general
// graph, adjacency-list form, deterministic scanning order.
class Blossom {
public:
    explicit Blossom(int n) : n_(n), adj_(n) {}

    void add_edge(int u, int v) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    std::vector<int> solve() {
        match_.assign(n_, -1);
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) augment(v);
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    bool augment(int root) {
        used_.assign(n_, 0);
        parent_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        std::vector<int> queue{root};
        used_[root] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int cur_base = lca(v, to);
                    blossom_.assign(n_, 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) {
                        // Augment along the alternating path to the root.
                        int u = to;
                        while (u >= 0) {
                            int pv = parent_[u], ppv = match_[pv];
                            match_[u] = pv;
                            match_[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return false;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

} // namespace

std::vector<std::pair<int, int>> maximum_matching(const SemicubeGraph& sg) {
    Blossom blossom(static_cast<int>(sg.nodes.size()));
    for (auto [i, j] : sg.links) blossom.add_edge(i, j);
    auto match = blossom.solve();
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < static_cast<int>(match.size()); ++v)
        if (match[v] > v) pairs.emplace_back(v, match[v]);
    return pairs;
}

int lattice_dimension(const Graph& g) {
    auto sg = semicube_graph(g);
    return isometric_dimension(g) - static_cast<int>(maximum_matching(sg).size());
}

namespace {

bool verify_l1(const Graph& g, const LatticeEmbedding& emb) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int l1 = 0;
            for (int k = 0; k < emb.dimension; ++k)
                l1 += std::abs(emb.coords[u][k] - emb.coords[v][k]);
            if (l1 != g.dist(u, v)) return false;
        }
    return true;
}

// Exhaustive search fallback, anchored at vertex 0, feasible only at desk
// scale. Vertices are assigned in BFS order; each candidate differs from
// an already-assigned neighbor by one in one coordinate.
bool exhaustive_assign(const Graph& g, int dim, std::vector<std::vector<int>>& coords,
                       const std::vector<int>& order, size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int anchor = -1;
    for (size_t i = 0; i < pos; ++i)
        if (g.has_edge(order[i], v)) {
            anchor = order[i];
            break;
        }
    if (anchor < 0) return false;
    for (int k = 0; k < dim; ++k)
        for (int delta : {1, -1}) {
            coords[v] = coords[anchor];
            coords[v][k] += delta;
            bool ok = true;
            for (size_t i = 0; i < pos && ok; ++i) {
                int u = order[i];
                int l1 = 0;
                for (int t = 0; t < dim; ++t) l1 += std::abs(coords[u][t] - coords[v][t]);
                ok = l1 == g.dist(u, v);
            }
            if (ok && exhaustive_assign(g, dim, coords, order, pos + 1)) return true;
        }
    return false;
}

} // namespace

LatticeEmbedding lattice_embedding(const Graph& g) {
    require_partial_cube(g);
    const int n = g.vertex_count();
    auto sg = semicube_graph(g);
    auto matching = maximum_matching(sg);
    const int node_count = static_cast<int>(sg.nodes.size());

    std::vector<int> partner(node_count, -1);
    for (auto [i, j] : matching) {
        partner[i] = j;
        partner[j] = i;
    }

    LatticeEmbedding emb;
    emb.coords.assign(n, {});

    // Matched semicubes chain up by proper inclusion; each chain yields one
    // coordinate counting how many chain members contain the vertex.
    std::vector<char> visited(node_count, 0);
    for (int start = 0; start < node_count; ++start) {
        if (visited[start] || partner[start] >= 0) continue;
        std::vector<const std::vector<int>*> chain;
        int cur = start;
        while (cur >= 0 && !visited[cur]) {
            visited[cur] = 1;
            chain.push_back(&sg.nodes[cur]);
            int opp = sg.opposite[cur];
            if (opp < 0 || visited[opp]) break;
            visited[opp] = 1;
            cur = partner[opp];
        }
        std::vector<int> containing(n, 0);
        for (const auto* set : chain)
            for (int v : *set) ++containing[v];
        for (int v = 0; v < n; ++v) emb.coords[v].push_back(containing[v]);
        ++emb.dimension;
    }

    bool all_visited = std::all_of(visited.begin(), visited.end(), [](char c) { return c; });
    if (all_visited && emb.dimension == lattice_dimension(g) && verify_l1(g, emb))
        return emb;

    // Unexpected matching shape; fall back to exhaustive search.
    const int dim = lattice_dimension(g);
    if (n <= 10 && dim <= 4) {
        LatticeEmbedding fallback;
        fallback.dimension = dim;
        fallback.coords.assign(n, std::vector<int>(dim, 0));
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g.dist(0, a) < g.dist(0, b); });
        if (exhaustive_assign(g, dim, fallback.coords, order, 1) &&
            verify_l1(g, fallback))
            return fallback;
    }
    throw Error("EmbeddingVerificationFailed",
                "lattice embedding construction failed verification");
}

} // namespace pcube
