#include "pcube/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace pcube {

namespace {

// Sorted multiset of BFS distances from v (with -1 for unreachable), a
// cheap isomorphism invariant.
std::vector<int> distance_profile(const Graph& g, int v) {
    std::vector<int> p;
    p.reserve(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) p.push_back(g.dist(v, u));
    std::sort(p.begin(), p.end());
    return p;
}

bool extend(const Graph& g1, const Graph& g2,
            const std::vector<std::vector<int>>& prof1,
            const std::vector<std::vector<int>>& prof2, std::vector<int>& map12,
            std::vector<char>& used2, int v) {
    const int n = g1.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used2[w] || prof1[v] != prof2[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            ok = g1.has_edge(u, v) == g2.has_edge(map12[u], w);
        if (!ok) continue;
        map12[v] = w;
        used2[w] = 1;
        if (extend(g1, g2, prof1, prof2, map12, used2, v + 1)) return true;
        used2[w] = 0;
    }
    return false;
}

} // namespace

bool isomorphic(const Graph& g1, const Graph& g2) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    if (n == 0) return true;

    std::vector<std::vector<int>> prof1, prof2;
    for (int v = 0; v < n; ++v) {
        prof1.push_back(distance_profile(g1, v));
        prof2.push_back(distance_profile(g2, v));
    }
    auto sorted1 = prof1, sorted2 = prof2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return false;

    std::vector<int> map12(n, -1);
    std::vector<char> used2(n, 0);
    return extend(g1, g2, prof1, prof2, map12, used2, 0);
}

} // namespace pcube
