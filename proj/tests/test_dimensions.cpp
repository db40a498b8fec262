#include <doctest.h>

#include <set>

#include "pcube/dimensions.hpp"
#include "pcube/recognition.hpp"
#include "pcube/relations.hpp"
#include "test_helpers.hpp"

using namespace pcube;
using namespace pcube::testing;

namespace {

bool l1_isometric(const Graph& g, const LatticeEmbedding& emb) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v) {
            int d = 0;
            for (int k = 0; k < emb.dimension; ++k)
                d += std::abs(emb.coords[u][k] - emb.coords[v][k]);
            if (d != g.dist(u, v)) return false;
        }
    return true;
}

// inclusion form of the link condition: W_ba properly contained in W_cd.
bool condition_54(const std::vector<int>& w_ba, const std::vector<int>& w_cd) {
    if (w_ba.size() >= w_cd.size()) return false;
    return std::includes(w_cd.begin(), w_cd.end(), w_ba.begin(), w_ba.end());
}

} // namespace

TEST_CASE("isometric dimension") {
    CHECK(isometric_dimension(Graph::build({"v"}, {})) == 0);
    CHECK(isometric_dimension(cycle(6)) == 3);
    CHECK(isometric_dimension(cycle(4)) == 2);
    CHECK(isometric_dimension(hypercube(3)) == 3);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Graph t = random_tree(rng, std::uniform_int_distribution<int>(2, 14)(rng));
        CHECK(isometric_dimension(t) == t.edge_count());
    }

    for (const Graph& g : {cycle(3), complete_bipartite(2, 3)}) {
        try {
            isometric_dimension(g);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == "NotPartialCube");
        }
    }
}

TEST_CASE("semicube graph") {
    Graph k2 = Graph::build({"a", "b"}, {{"a", "b"}});
    auto s2 = semicube_graph(k2);
    CHECK(s2.nodes.size() == 2);
    CHECK(s2.links.empty());

    auto s6 = semicube_graph(cycle(6));
    CHECK(s6.nodes.size() == 6);
    CHECK(s6.links.empty());

    // K_{1,3}: three singleton leaves plus three 3-element semicubes that
    // pairwise cover V and intersect at the center
    auto sk = semicube_graph(star(3));
    CHECK(sk.nodes.size() == 6);
    CHECK(sk.links.size() == 3);
    for (auto [i, j] : sk.links) {
        CHECK(sk.nodes[i].size() == 3);
        CHECK(sk.nodes[j].size() == 3);
    }

    // the cover-and-meet condition defines exactly the links; opposite nodes complement
    std::mt19937 rng(63);
    std::vector<Graph> cubes{k2, cycle(4), cycle(6), star(3), star(6), path(5), hypercube(3)};
    for (int i = 0; i < 5; ++i) cubes.push_back(random_partial_cube(rng, 10));
    for (const Graph& g : cubes) {
        auto sg = semicube_graph(g);
        int n = static_cast<int>(sg.nodes.size());
        std::set<std::pair<int, int>> links(sg.links.begin(), sg.links.end());
        for (int i = 0; i < n; ++i) {
            // opposite is the complement
            std::vector<int> both = sg.nodes[i];
            both.insert(both.end(), sg.nodes[sg.opposite[i]].begin(),
                        sg.nodes[sg.opposite[i]].end());
            std::sort(both.begin(), both.end());
            CHECK(static_cast<int>(both.size()) == g.vertex_count());
            CHECK(std::adjacent_find(both.begin(), both.end()) == both.end());
            // the defining edge really produces this semicube
            auto [a, b] = sg.defining_edges[i];
            CHECK(semicube(g, a, b).w_ab == sg.nodes[i]);
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> inter, uni;
                std::set_intersection(sg.nodes[i].begin(), sg.nodes[i].end(),
                                      sg.nodes[j].begin(), sg.nodes[j].end(),
                                      std::back_inserter(inter));
                std::set_union(sg.nodes[i].begin(), sg.nodes[i].end(),
                               sg.nodes[j].begin(), sg.nodes[j].end(),
                               std::back_inserter(uni));
                bool linked = static_cast<int>(uni.size()) == g.vertex_count() &&
                              !inter.empty();
                CHECK(links.count({i, j}) == linked);
                // cover-and-meet <=> proper inclusion on partial cubes
                bool c54 = condition_54(sg.nodes[sg.opposite[i]], sg.nodes[j]) ||
                           condition_54(sg.nodes[sg.opposite[j]], sg.nodes[i]);
                CHECK(linked == c54);
            }
        }
    }
}

TEST_CASE("maximum matching agrees with exhaustive search") {
    std::mt19937 rng(5);
    std::vector<Graph> cubes{cycle(6), path(5), star(3), star(6), star(7), hypercube(3)};
    for (int i = 0; i < 8; ++i) cubes.push_back(random_partial_cube(rng, 10));
    for (const Graph& g : cubes) {
        auto sg = semicube_graph(g);
        auto m = maximum_matching(sg);
        std::set<int> used;
        std::set<std::pair<int, int>> links(sg.links.begin(), sg.links.end());
        for (auto [u, v] : m) {
            CHECK(links.count({std::min(u, v), std::max(u, v)}));
            CHECK(!used.count(u));
            CHECK(!used.count(v));
            used.insert(u);
            used.insert(v);
        }
        CHECK(static_cast<int>(m.size()) ==
              brute_force_max_matching(static_cast<int>(sg.nodes.size()), sg.links));
    }

    CHECK(maximum_matching(semicube_graph(cycle(6))).empty());
    CHECK(maximum_matching(semicube_graph(path(5))).size() == 3); // dim 4 -> 1
    CHECK(maximum_matching(semicube_graph(star(6))).size() == 3); // dim 6 -> 3
}

TEST_CASE("lattice dimension") {
    CHECK(lattice_dimension(cycle(6)) == 3);
    CHECK(lattice_dimension(star(3)) == 2);
    CHECK(lattice_dimension(path(2)) == 1);
    CHECK(lattice_dimension(path(7)) == 1);

    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        Graph t = random_tree(rng, std::uniform_int_distribution<int>(2, 16)(rng));
        int di = isometric_dimension(t);
        int dz = lattice_dimension(t);
        CHECK(dz == (leaf_count(t) + 1) / 2);
        CHECK(dz <= di);
        CHECK((dz == di) == maximum_matching(semicube_graph(t)).empty());
    }
}

TEST_CASE("lattice embedding is a verified l1 isometry") {
    Graph k2 = Graph::build({"a", "b"}, {{"a", "b"}});
    auto e2 = lattice_embedding(k2);
    CHECK(e2.dimension == 1);
    CHECK(std::abs(e2.coords[0][0] - e2.coords[1][0]) == 1);

    auto ep = lattice_embedding(path(5));
    CHECK(ep.dimension == 1);
    CHECK(l1_isometric(path(5), ep));

    auto e6 = lattice_embedding(cycle(6));
    CHECK(e6.dimension == 3);
    CHECK(l1_isometric(cycle(6), e6));

    std::mt19937 rng(8);
    std::vector<Graph> cubes{star(3), star(6), star(7), hypercube(3), cycle(4), path(9)};
    for (int i = 0; i < 12; ++i) cubes.push_back(random_partial_cube(rng, 12));
    for (const Graph& g : cubes) {
        auto emb = lattice_embedding(g);
        CHECK(emb.dimension == lattice_dimension(g));
        CHECK(l1_isometric(g, emb));
    }
}
