#include "pcube/recognition.hpp"

#include <algorithm>
#include <array>

#include "pcube/set_family.hpp"

namespace pcube {

namespace {

// First triple (x, y, z) violating convexity of `members`, in canonical
// vertex order, or nullopt.
std::optional<std::array<int, 3>> convexity_violation(const Graph& g,
                                                      const std::vector<int>& members) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (int v : members) mask[v] = 1;
    for (int x : members)
        for (int y : members) {
            if (x >= y) continue;
            for (int z = 0; z < g.vertex_count(); ++z) {
                if (mask[z]) continue;
                if (g.dist(x, z) + g.dist(z, y) == g.dist(x, y))
                    return std::array<int, 3>{x, y, z};
            }
        }
    return std::nullopt;
}

} // namespace

RecognitionReport recognize(const Graph& g) {
    if (g.vertex_count() == 0)
        throw Error("EmptyGraph", "recognition requires a nonempty graph");
    if (!g.is_connected())
        throw Error("Disconnected", "recognition requires a connected graph");

    RecognitionReport report;
    auto bip = g.bipartite();
    if (!bip.bipartite) {
        RecognitionWitness w;
        w.kind = RecognitionWitness::Kind::NotBipartite;
        w.odd_walk = bip.odd_walk;
        report.witness = w;
        return report;
    }
    for (const auto& e : g.edges()) {
        auto sc = semicube(g, e.first, e.second);
        for (int side = 0; side < 2; ++side) {
            const auto& members = side == 0 ? sc.w_ab : sc.w_ba;
            if (auto viol = convexity_violation(g, members)) {
                RecognitionWitness w;
                w.kind = RecognitionWitness::Kind::NonConvexSemicube;
                w.edge = side == 0 ? Edge{e.first, e.second} : Edge{e.second, e.first};
                w.x = (*viol)[0];
                w.y = (*viol)[1];
                w.z = (*viol)[2];
                report.witness = w;
                return report;
            }
        }
    }
    report.is_partial_cube = true;
    report.embedding = embed_hypercube(g);
    return report;
}

HypercubeEmbedding embed_hypercube(const Graph& g) {
    if (g.vertex_count() == 0)
        throw Error("EmptyGraph", "cannot embed an empty graph");
    if (!g.is_connected())
        throw Error("Disconnected", "cannot embed a disconnected graph");

    auto tp = theta_partition(g);
    if (!tp.is_equivalence)
        throw Error("NotPartialCube", "theta is not an equivalence relation");

    // Classes come out ordered by their smallest edge index already; the
    // representative is that smallest edge.
    HypercubeEmbedding emb;
    emb.assignment.assign(g.vertex_count(), {});
    const int base = 0;
    for (int c = 0; c < static_cast<int>(tp.classes.size()); ++c) {
        emb.label_set.push_back("c" + std::to_string(c));
        auto [a, b] = g.edges()[tp.classes[c].front()];
        auto sc = semicube(g, a, b);
        // The positive side is the one not containing the base vertex, so
        // the base vertex maps to the empty set.
        bool base_on_a_side =
            std::binary_search(sc.w_ab.begin(), sc.w_ab.end(), base);
        const auto& positive = base_on_a_side ? sc.w_ba : sc.w_ab;
        for (int v : positive) emb.assignment[v].push_back(c);
    }
    for (auto& s : emb.assignment) std::sort(s.begin(), s.end());
    if (!verify_embedding(g, emb))
        throw Error("NotPartialCube", "graph admits no isometric hypercube embedding");
    return emb;
}

bool verify_embedding(const Graph& g, const HypercubeEmbedding& emb) {
    if (static_cast<int>(emb.assignment.size()) != g.vertex_count())
        throw Error("VertexMismatch", "assignment does not cover exactly the vertices");
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (symmetric_difference_size(emb.assignment[u], emb.assignment[v]) !=
                g.dist(u, v))
                return false;
        }
    return true;
}

RectangleResult rectangle_check(const Graph& g) {
    if (!g.is_connected())
        throw Error("Disconnected", "rectangle check requires a connected graph");
    if (!g.bipartite().bipartite)
        throw Error("NotBipartite", "rectangle check requires a bipartite graph");

    RectangleResult res;
    for (const auto& e : g.edges()) {
        auto fs = fundamental_sets(g, e.first, e.second);
        // Orient each theta-class edge with its a-side endpoint first.
        std::vector<char> on_a_side(g.vertex_count(), 0);
        for (int v : fs.semicubes.w_ab) on_a_side[v] = 1;
        std::vector<Edge> oriented;
        for (int ei : fs.f_ab) {
            auto [u, v] = g.edges()[ei];
            oriented.push_back(on_a_side[u] ? Edge{u, v} : Edge{v, u});
        }
        for (size_t i = 0; i < oriented.size(); ++i)
            for (size_t j = i + 1; j < oriented.size(); ++j) {
                auto [x, y] = oriented[i];
                auto [u, v] = oriented[j];
                if (g.dist(x, u) != g.dist(y, v) || g.dist(x, v) != g.dist(y, u)) {
                    res.ok = false;
                    res.base_edge = e;
                    res.x = x;
                    res.y = y;
                    res.u = u;
                    res.v = v;
                    return res;
                }
            }
    }
    return res;
}

} // namespace pcube
