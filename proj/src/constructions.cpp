#include "pcube/constructions.hpp"

#include <algorithm>
#include <set>

#include "pcube/relations.hpp"

namespace pcube {

namespace {

void require_connected(const Graph& g) {
    if (!g.is_connected())
        throw Error("Disconnected", "operation requires connected inputs");
}

std::string product_label(const std::string& x, const std::string& y) {
    return "(" + x + "|" + y + ")";
}

} // namespace

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    std::vector<std::string> vs;
    vs.reserve(static_cast<size_t>(g1.vertex_count()) * g2.vertex_count());
    for (const auto& x : g1.labels())
        for (const auto& y : g2.labels()) vs.push_back(product_label(x, y));

    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [u, v] : g1.edges())
        for (const auto& y : g2.labels())
            es.emplace_back(product_label(g1.label(u), y), product_label(g1.label(v), y));
    for (const auto& x : g1.labels())
        for (const auto& [u, v] : g2.edges())
            es.emplace_back(product_label(x, g2.label(u)), product_label(x, g2.label(v)));
    return Graph::build(vs, es);
}

Graph vertex_paste(const Graph& g1, const std::string& a1,
                   const Graph& g2, const std::string& a2) {
    int ia1 = g1.index_of(a1);
    int ia2 = g2.index_of(a2);
    (void)ia1;
    require_connected(g1);
    require_connected(g2);

    const std::string merged = "1:" + a1;
    auto side2 = [&](int v) {
        return v == ia2 ? merged : "2:" + g2.label(v);
    };

    std::vector<std::string> vs;
    for (const auto& x : g1.labels()) vs.push_back("1:" + x);
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (v != ia2) vs.push_back(side2(v));

    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [u, v] : g1.edges())
        es.emplace_back("1:" + g1.label(u), "1:" + g1.label(v));
    for (const auto& [u, v] : g2.edges()) es.emplace_back(side2(u), side2(v));
    return Graph::build(vs, es);
}

Graph edge_paste(const Graph& g1, const std::string& a1, const std::string& b1,
                 const Graph& g2, const std::string& a2, const std::string& b2) {
    int ia1 = g1.index_of(a1), ib1 = g1.index_of(b1);
    int ia2 = g2.index_of(a2), ib2 = g2.index_of(b2);
    if (!g1.has_edge(ia1, ib1))
        throw Error("NotAnEdge", "pasting pair is not an edge of the first graph");
    if (!g2.has_edge(ia2, ib2))
        throw Error("NotAnEdge", "pasting pair is not an edge of the second graph");
    require_connected(g1);
    require_connected(g2);

    auto side2 = [&](int v) -> std::string {
        if (v == ia2) return "1:" + a1;
        if (v == ib2) return "1:" + b1;
        return "2:" + g2.label(v);
    };

    std::vector<std::string> vs;
    for (const auto& x : g1.labels()) vs.push_back("1:" + x);
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (v != ia2 && v != ib2) vs.push_back(side2(v));

    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [u, v] : g1.edges())
        es.emplace_back("1:" + g1.label(u), "1:" + g1.label(v));
    for (const auto& [u, v] : g2.edges()) {
        if ((u == ia2 && v == ib2) || (u == ib2 && v == ia2)) continue; // shared edge
        es.emplace_back(side2(u), side2(v));
    }
    return Graph::build(vs, es);
}

Graph expand(const Graph& g, const ExpansionSpec& spec) {
    const int n = g.vertex_count();
    std::vector<int> v1, v2;
    for (const auto& x : spec.v1) v1.push_back(g.index_of(x));
    for (const auto& x : spec.v2) v2.push_back(g.index_of(x));
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());

    std::vector<char> in1(n, 0), in2(n, 0);
    for (int v : v1) in1[v] = 1;
    for (int v : v2) in2[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!in1[v] && !in2[v])
            throw Error("NotCovering", "the two vertex sets do not cover the graph");
    bool meets = false;
    for (int v = 0; v < n && !meets; ++v) meets = in1[v] && in2[v];
    if (!meets)
        throw Error("EmptyIntersection", "the two vertex sets are disjoint");
    for (const auto* side : {&v1, &v2}) {
        bool isometric;
        try {
            isometric = g.is_isometric_subset(*side);
        } catch (const Error& err) {
            if (err.code() == "DisconnectedSubset") isometric = false;
            else throw;
        }
        if (!isometric)
            throw Error("NotIsometricSubgraph",
                        "expansion side does not induce an isometric subgraph");
    }

    std::vector<std::string> vs;
    for (int v : v1) vs.push_back(g.label(v) + "^1");
    for (int v : v2) vs.push_back(g.label(v) + "^2");

    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [u, v] : g.edges()) {
        if (in1[u] && in1[v]) es.emplace_back(g.label(u) + "^1", g.label(v) + "^1");
        if (in2[u] && in2[v]) es.emplace_back(g.label(u) + "^2", g.label(v) + "^2");
    }
    for (int v = 0; v < n; ++v)
        if (in1[v] && in2[v]) es.emplace_back(g.label(v) + "^1", g.label(v) + "^2");
    return Graph::build(vs, es);
}

ContractionResult contract_detailed(const Graph& g, int a, int b) {
    require_connected(g);
    auto fs = fundamental_sets(g, a, b); // throws NotAnEdge
    const auto& sc = fs.semicubes;
    const int n = g.vertex_count();

    if (static_cast<int>(sc.w_ab.size() + sc.w_ba.size()) != n)
        throw Error("NotAPartition", "opposite semicubes do not partition the vertex set");
    if (!g.is_convex_subset(sc.w_ab) || !g.is_convex_subset(sc.w_ba))
        throw Error("NonConvexSemicube", "a semicube of the contraction edge is not convex");

    // The theta-class edges must form a matching...
    std::vector<int> partner(n, -1);
    std::vector<char> on_a_side(n, 0);
    for (int v : sc.w_ab) on_a_side[v] = 1;
    for (int ei : fs.f_ab) {
        auto [u, v] = g.edges()[ei];
        if (!on_a_side[u]) std::swap(u, v);
        if (partner[u] >= 0 || partner[v] >= 0)
            throw Error("MatchingNotIsomorphism", "theta-class edges are not a matching");
        partner[u] = v;
        partner[v] = u;
    }
    // ...and induce an isomorphism between the boundary subgraphs.
    for (int u : fs.u_ab)
        for (int u2 : fs.u_ab) {
            if (u >= u2) continue;
            if (g.has_edge(u, u2) != g.has_edge(partner[u], partner[u2]))
                throw Error("MatchingNotIsomorphism",
                            "theta-class matching does not preserve boundary edges");
        }

    ContractionResult res;
    for (int v : sc.w_ab) {
        res.w_ab.push_back(g.label(v));
        res.projection[g.label(v)] = g.label(v);
    }
    for (int v : sc.w_ba) {
        res.w_ba.push_back(g.label(v));
        res.projection[g.label(v)] = partner[v] >= 0 ? g.label(partner[v]) : g.label(v);
    }

    std::vector<std::string> vs;
    for (int v : sc.w_ab) vs.push_back(g.label(v));
    for (int v : sc.w_ba)
        if (partner[v] < 0) vs.push_back(g.label(v));

    std::set<std::pair<std::string, std::string>> seen;
    std::vector<std::pair<std::string, std::string>> es;
    auto add_edge = [&](const std::string& u, const std::string& v) {
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        if (seen.insert(key).second) es.push_back(key);
    };
    for (const auto& [u, v] : g.edges()) {
        bool ua = on_a_side[u], va = on_a_side[v];
        if (ua && va) add_edge(g.label(u), g.label(v));
        if (!ua && !va) add_edge(res.projection[g.label(u)], res.projection[g.label(v)]);
    }
    res.graph = Graph::build(vs, es);
    return res;
}

Graph contract(const Graph& g, int a, int b) {
    return contract_detailed(g, a, b).graph;
}

ExpansionSequence expansion_sequence(const Graph& g) {
    if (g.vertex_count() == 0)
        throw Error("EmptyGraph", "expansion sequence requires a nonempty graph");
    if (!g.is_connected())
        throw Error("Disconnected", "expansion sequence requires a connected graph");
    if (!g.bipartite().bipartite || !theta_partition(g).is_equivalence)
        throw Error("NotPartialCube", "expansion sequence requires a partial cube");

    struct RawStep {
        std::vector<std::string> v1, v2; // in the contracted graph's labels
        std::unordered_map<std::string, std::string> lift_ba; // contracted -> original
    };
    std::vector<RawStep> raw;
    Graph cur = g;
    while (cur.vertex_count() > 1) {
        // Contract along the canonically smallest edge; its theta class is
        // determined by the edge, so the choice is deterministic.
        auto [a, b] = cur.edges().front();
        auto cd = contract_detailed(cur, a, b);
        RawStep step;
        for (const auto& x : cd.w_ab) step.v1.push_back(cd.projection[x]);
        for (const auto& x : cd.w_ba) {
            step.v2.push_back(cd.projection[x]);
            step.lift_ba[cd.projection[x]] = x;
        }
        raw.push_back(std::move(step));
        cur = cd.graph;
    }

    ExpansionSequence seq;
    seq.base_label = cur.vertex_count() > 0 ? cur.label(0) : "";

    // Replay from K_1, translating each step's vertex sets into the labels
    // of the replayed graph via the accumulated isomorphism.
    Graph replayed = Graph::build({seq.base_label}, {});
    std::unordered_map<std::string, std::string> to_replayed; // actual -> replayed
    to_replayed[seq.base_label] = seq.base_label;
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        ExpansionStep step;
        for (const auto& x : it->v1) step.spec.v1.push_back(to_replayed.at(x));
        for (const auto& x : it->v2) step.spec.v2.push_back(to_replayed.at(x));
        step.result_size = static_cast<int>(step.spec.v1.size() + step.spec.v2.size());
        replayed = expand(replayed, step.spec);

        std::unordered_map<std::string, std::string> next;
        for (size_t i = 0; i < it->v1.size(); ++i)
            next[it->v1[i]] = step.spec.v1[i] + "^1";
        for (size_t i = 0; i < it->v2.size(); ++i)
            next[it->lift_ba.at(it->v2[i])] = step.spec.v2[i] + "^2";
        to_replayed = std::move(next);
        seq.steps.push_back(std::move(step));
    }
    return seq;
}

} // namespace pcube
