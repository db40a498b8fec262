#include "pcube/relations.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace pcube {

namespace {

void require_connected(const Graph& g) {
    if (!g.is_connected())
        throw Error("Disconnected", "operation requires a connected graph");
}

void require_edge(const Graph& g, int a, int b) {
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() || !g.has_edge(a, b))
        throw Error("NotAnEdge", "vertex pair is not an edge of the graph");
}

// side[w] = +1 if w is closer to a, -1 if closer to b, 0 if equidistant.
std::vector<signed char> sides(const Graph& g, int a, int b) {
    std::vector<signed char> s(g.vertex_count(), 0);
    for (int w = 0; w < g.vertex_count(); ++w) {
        int da = g.dist(w, a), db = g.dist(w, b);
        if (da < db) s[w] = 1;
        else if (da > db) s[w] = -1;
    }
    return s;
}

} // namespace

SemicubePair semicube(const Graph& g, int a, int b) {
    require_connected(g);
    require_edge(g, a, b);
    SemicubePair sc;
    sc.a = a;
    sc.b = b;
    for (int w = 0; w < g.vertex_count(); ++w) {
        int da = g.dist(w, a), db = g.dist(w, b);
        if (da < db) {
            // Lemma: membership is equivalent to d(w,b) = d(w,a) + 1.
            assert(db == da + 1);
            sc.w_ab.push_back(w);
        } else if (db < da) {
            assert(da == db + 1);
            sc.w_ba.push_back(w);
        }
    }
    return sc;
}

bool djokovic_related(const Graph& g, Edge e, Edge f) {
    require_connected(g);
    require_edge(g, e.first, e.second);
    require_edge(g, f.first, f.second);
    auto s = sides(g, e.first, e.second);
    return s[f.first] != 0 && s[f.second] != 0 && s[f.first] != s[f.second];
}

bool winkler_related(const Graph& g, Edge e, Edge f) {
    require_connected(g);
    require_edge(g, e.first, e.second);
    require_edge(g, f.first, f.second);
    auto [x, y] = e;
    auto [u, v] = f;
    bool rel = g.dist(x, u) + g.dist(y, v) != g.dist(x, v) + g.dist(y, u);
    // The definition is independent of the endpoint ordering of f.
    assert(rel == (g.dist(x, v) + g.dist(y, u) != g.dist(x, u) + g.dist(y, v)));
    return rel;
}

ThetaPartition theta_partition(const Graph& g) {
    require_connected(g);
    const int m = g.edge_count();
    std::vector<std::vector<signed char>> side(m);
    for (int i = 0; i < m; ++i)
        side[i] = sides(g, g.edges()[i].first, g.edges()[i].second);

    auto raw = [&](int i, int j) {
        auto [u, v] = g.edges()[j];
        return side[i][u] != 0 && side[i][v] != 0 && side[i][u] != side[i][v];
    };

    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> root_of(m);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (raw(i, j)) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }

    ThetaPartition tp;
    std::vector<int> class_of(m, -1);
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (class_of[r] < 0) {
            class_of[r] = static_cast<int>(tp.classes.size());
            tp.classes.emplace_back();
        }
        tp.classes[class_of[r]].push_back(i);
    }
    for (const auto& cls : tp.classes) {
        for (size_t i = 0; i < cls.size() && tp.is_equivalence; ++i)
            for (size_t j = i + 1; j < cls.size(); ++j)
                if (!raw(cls[i], cls[j])) {
                    tp.is_equivalence = false;
                    break;
                }
        if (!tp.is_equivalence) break;
    }
    return tp;
}

FundamentalSets fundamental_sets(const Graph& g, int a, int b) {
    FundamentalSets fs;
    fs.semicubes = semicube(g, a, b);
    auto s = sides(g, a, b);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        if (s[u] != 0 && s[v] != 0 && s[u] != s[v]) fs.f_ab.push_back(i);
    }
    for (int w : fs.semicubes.w_ab)
        for (int x : g.neighbors(w))
            if (s[x] == -1) {
                fs.u_ab.push_back(w);
                break;
            }
    for (int w : fs.semicubes.w_ba)
        for (int x : g.neighbors(w))
            if (s[x] == 1) {
                fs.u_ba.push_back(w);
                break;
            }
    return fs;
}

} // namespace pcube
