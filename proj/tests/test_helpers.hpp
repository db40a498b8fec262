#ifndef PCUBE_TEST_HELPERS_HPP
#define PCUBE_TEST_HELPERS_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pcube/constructions.hpp"
#include "pcube/graph.hpp"
#include "pcube/isomorphism.hpp"
#include "pcube/set_family.hpp"

namespace pcube::testing {

// ---- standard graphs ------------------------------------------------

inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph::build_indexed(n, edges);
}

inline Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build_indexed(n, edges);
}

// Star K_{1,n}: center "c", leaves "l1".."ln".
inline Graph star(int n) {
    std::vector<std::string> vs{"c"};
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n; ++i) {
        vs.push_back("l" + std::to_string(i));
        es.emplace_back("c", vs.back());
    }
    return Graph::build(vs, es);
}

inline Graph complete_bipartite(int m, int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph::build_indexed(m + n, edges);
}

inline Graph hypercube(int d) {
    int n = 1 << d;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k)
            if (!(v & (1 << k))) edges.push_back(make_edge(v, v | (1 << k)));
    return Graph::build_indexed(n, edges);
}

// ---- independent distance oracle ------------------------------------

// Plain BFS over an adjacency list, bypassing Graph's cached matrix.
inline std::vector<int> bfs_oracle(int n, const std::vector<Edge>& edges, int source) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> dist(n, -1);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

// ---- brute-force hypercube embeddability ----------------------------

// Searches distance-preserving assignments of vertices to finite label
// sets, anchored at vertex 0 -> empty set. Candidate sets extend an
// already-assigned neighbor one level down by a single label, which covers
// all embeddings up to relabeling. Feasible for <= 8 vertices.
inline bool brute_force_embeddable(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.dist(0, a) < g.dist(0, b); });
    for (int v = 0; v < n; ++v)
        if (g.dist(0, v) < 0) return false;

    std::vector<std::vector<int>> sets(n);
    int labels_used = 0;

    std::function<bool(size_t)> assign = [&](size_t pos) -> bool {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (size_t i = 0; i < pos; ++i) {
            int u = order[i];
            if (!g.has_edge(u, v) || g.dist(0, u) + 1 != g.dist(0, v)) continue;
            // S(v) = S(u) + {x} for some label x not in S(u).
            for (int x = 0; x <= labels_used; ++x) {
                if (std::find(sets[u].begin(), sets[u].end(), x) != sets[u].end()) continue;
                sets[v] = sets[u];
                sets[v].push_back(x);
                std::sort(sets[v].begin(), sets[v].end());
                bool ok = true;
                for (size_t k = 0; k < pos && ok; ++k)
                    ok = symmetric_difference_size(sets[order[k]], sets[v]) ==
                         g.dist(order[k], v);
                int saved = labels_used;
                if (x == labels_used) ++labels_used;
                if (ok && assign(pos + 1)) return true;
                labels_used = saved;
            }
            break; // candidates from one parent already cover all sets
        }
        sets[v].clear();
        return false;
    };
    return assign(1);
}

// ---- brute-force maximum matching ------------------------------------

inline int brute_force_max_matching(int n, const std::vector<std::pair<int, int>>& links) {
    std::vector<char> used(n, 0);
    std::function<int(size_t)> go = [&](size_t i) -> int {
        if (i == links.size()) return 0;
        int best = go(i + 1);
        auto [u, v] = links[i];
        if (!used[u] && !used[v]) {
            used[u] = used[v] = 1;
            best = std::max(best, 1 + go(i + 1));
            used[u] = used[v] = 0;
        }
        return best;
    };
    return go(0);
}

// ---- well-gradedness by the chain definition -------------------------

// Exhaustive search for single-step chains between every member pair.
inline bool wg_by_definition(const SetFamily& fam) {
    const auto& members = fam.members();
    const int n = fam.size();
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            int target = symmetric_difference_size(members[p], members[q]);
            // BFS over members stepping by symmetric difference 1.
            std::vector<int> dist(n, -1);
            dist[p] = 0;
            std::deque<int> queue{p};
            while (!queue.empty()) {
                int r = queue.front();
                queue.pop_front();
                for (int s = 0; s < n; ++s)
                    if (dist[s] < 0 &&
                        symmetric_difference_size(members[r], members[s]) == 1) {
                        dist[s] = dist[r] + 1;
                        queue.push_back(s);
                    }
            }
            if (dist[q] != target) return false;
        }
    return true;
}

// ---- random generators ------------------------------------------------

inline Graph random_tree(std::mt19937& rng, int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Graph::build_indexed(n, edges);
}

inline int leaf_count(const Graph& g) {
    int leaves = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v).size() == 1) ++leaves;
    return leaves;
}

// Random isometric subset of g containing at least one vertex, found by
// growing a random connected set and testing.
inline std::vector<std::string> random_isometric_subset(std::mt19937& rng, const Graph& g) {
    const int n = g.vertex_count();
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<char> in(n, 0);
        std::vector<int> members{pick_vertex(rng)};
        in[members[0]] = 1;
        std::uniform_int_distribution<int> size_dist(1, n);
        int target = size_dist(rng);
        while (static_cast<int>(members.size()) < target) {
            std::vector<int> frontier;
            for (int v : members)
                for (int w : g.neighbors(v))
                    if (!in[w]) frontier.push_back(w);
            if (frontier.empty()) break;
            int w = frontier[std::uniform_int_distribution<size_t>(0, frontier.size() - 1)(rng)];
            in[w] = 1;
            members.push_back(w);
        }
        std::sort(members.begin(), members.end());
        bool ok = false;
        try {
            ok = g.is_isometric_subset(members);
        } catch (const Error&) {
            ok = false;
        }
        if (ok) {
            std::vector<std::string> labels;
            for (int v : members) labels.push_back(g.label(v));
            return labels;
        }
    }
    return {g.label(0)};
}

// Random partial cube grown from K_1 by random isometric expansions.
inline Graph random_partial_cube(std::mt19937& rng, int max_vertices) {
    Graph g = Graph::build({"r"}, {});
    for (;;) {
        std::vector<std::string> v1 = random_isometric_subset(rng, g);
        std::vector<std::string> v2;
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            v2 = g.labels();
        } else {
            v2 = random_isometric_subset(rng, g);
        }
        // v1 ∪ v2 must cover and meet; patch by falling back to the full set.
        std::vector<char> covered(g.vertex_count(), 0);
        for (const auto& x : v1) covered[g.index_of(x)] = 1;
        bool meets = false;
        for (const auto& x : v2) {
            if (covered[g.index_of(x)]) meets = true;
            covered[g.index_of(x)] = 1;
        }
        if (!meets || std::count(covered.begin(), covered.end(), 1) != g.vertex_count())
            v2 = g.labels();
        if (static_cast<int>(v1.size() + v2.size()) > max_vertices) break;
        g = expand(g, ExpansionSpec{v1, v2});
    }
    return g;
}

} // namespace pcube::testing

#endif
