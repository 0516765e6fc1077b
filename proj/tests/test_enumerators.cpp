#include "doctest.h"

#include <random>

#include "domset/enumerators.hpp"
#include "domset/io.hpp"
#include "test_util.hpp"

using namespace domset;
using namespace testutil;

TEST_CASE("enum_mds_triangle_free") {
    SUBCASE("C4: the six pairs") {
        BicoloredGraph bg(cycle_graph(4), VertexSet::full(4));
        auto out = enum_mds_triangle_free(bg)->collect();
        CHECK(out.size() == 6);
        CHECK(duplicate_free(out));
        CHECK(to_family(out) == ref_mds_all(bg.graph));
    }
    SUBCASE("K_{3,3}: nine cross pairs plus the two sides") {
        BicoloredGraph bg(complete_bipartite(3, 3), VertexSet::full(6));
        auto out = enum_mds_triangle_free(bg)->collect();
        CHECK(out.size() == 11);
        CHECK(to_family(out) == ref_mds_all(bg.graph));
    }
    SUBCASE("random bipartite graphs agree with the reference") {
        std::mt19937_64 rng(71);
        for (int rep = 0; rep < 60; ++rep) {
            int n1 = 1 + static_cast<int>(rng() % 4), n2 = 1 + static_cast<int>(rng() % 4);
            Graph g = gen_random_bipartite(n1, n2, 0.5, rng());
            BicoloredGraph bg(g, VertexSet::full(g.vertex_count()));
            auto out = enum_mds_triangle_free(bg)->collect();
            CHECK(duplicate_free(out));
            CHECK(to_family(out) == ref_mds_all(g));
        }
    }
    SUBCASE("triangle in G[A] raises a class violation with a witness") {
        BicoloredGraph bg(complete_graph(3), VertexSet::full(3));
        CHECK_THROWS_AS(enum_mds_triangle_free(bg), ClassViolation);
        try {
            enum_mds_triangle_free(bg);
        } catch (const ClassViolation& e) {
            CHECK(e.forbidden_subgraph() == "triangle");
            CHECK(e.witness() == VertexSet{0, 1, 2});
        }
        // triangle outside A is fine
        Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        BicoloredGraph ok(g, VertexSet{3});
        CHECK(to_family(enum_mds_triangle_free(ok)->collect()) == ref_mds(g, VertexSet{3}));
    }
}

TEST_CASE("enum_mds_general") {
    SUBCASE("A empty gives the empty set") {
        BicoloredGraph bg(path_graph(3), VertexSet{});
        auto out = enum_mds_general(bg)->collect();
        REQUIRE(out.size() == 1);
        CHECK(out[0] == VertexSet{});
    }
    SUBCASE("K4: the four singletons") {
        BicoloredGraph bg(complete_graph(4), VertexSet::full(4));
        auto out = enum_mds_general(bg)->collect();
        CHECK(to_family(out) == SetFamily{{0}, {1}, {2}, {3}});
    }
    SUBCASE("all labeled graphs with up to 4 vertices, A = V") {
        for (int n = 0; n <= 4; ++n)
            for (const Graph& g : all_labeled_graphs(n)) {
                BicoloredGraph bg(g, VertexSet::full(n));
                auto out = enum_mds_general(bg)->collect();
                CHECK(duplicate_free(out));
                CHECK(to_family(out) == ref_mds_all(g));
            }
    }
    SUBCASE("random bicolored graphs up to n = 7") {
        std::mt19937_64 rng(72);
        for (int rep = 0; rep < 100; ++rep) {
            int n = 1 + static_cast<int>(rng() % 7);
            Graph g = random_graph(n, 0.4, rng);
            VertexSet a = random_subset(n, 0.6, rng);
            BicoloredGraph bg(g, a);
            auto out = enum_mds_general(bg)->collect();
            CHECK(duplicate_free(out));
            CHECK(to_family(out) == ref_mds(g, a));
        }
    }
    SUBCASE("the triangle-free base-case flag preserves the output") {
        std::mt19937_64 rng(73);
        for (int rep = 0; rep < 40; ++rep) {
            int n = 1 + static_cast<int>(rng() % 6);
            Graph g = random_graph(n, 0.35, rng);
            BicoloredGraph bg(g, VertexSet::full(n));
            GeneralOptions fast;
            fast.triangle_free_base = true;
            CHECK(to_family(enum_mds_general(bg, fast)->collect()) ==
                  to_family(enum_mds_general(bg)->collect()));
        }
    }
}

TEST_CASE("enum_maximal_independent_sets") {
    SUBCASE("K3: the three singletons") {
        auto out = enum_maximal_independent_sets(complete_graph(3))->collect();
        CHECK(to_family(out) == SetFamily{{0}, {1}, {2}});
    }
    SUBCASE("P4") {
        auto out = enum_maximal_independent_sets(path_graph(4))->collect();
        CHECK(to_family(out) == SetFamily{{0, 2}, {0, 3}, {1, 3}});
    }
    SUBCASE("edgeless graph: the whole vertex set") {
        auto out = enum_maximal_independent_sets(Graph(5))->collect();
        REQUIRE(out.size() == 1);
        CHECK(out[0] == VertexSet::full(5));
    }
    SUBCASE("matches the reference on random graphs") {
        std::mt19937_64 rng(74);
        for (int rep = 0; rep < 150; ++rep) {
            int n = static_cast<int>(rng() % 9);
            Graph g = random_graph(n, 0.4, rng);
            auto out = enum_maximal_independent_sets(g)->collect();
            CHECK(duplicate_free(out));
            CHECK(to_family(out) == ref_mis(g));
        }
    }
}

TEST_CASE("enum_mds_kt_plus_k2") {
    SUBCASE("edgeless graph: only phase one fires") {
        auto out = enum_mds_kt_plus_k2(Graph(4))->collect();
        REQUIRE(out.size() == 1);
        CHECK(out[0] == VertexSet::full(4));
    }
    SUBCASE("K3") {
        auto out = enum_mds_kt_plus_k2(complete_graph(3))->collect();
        CHECK(to_family(out) == SetFamily{{0}, {1}, {2}});
    }
    SUBCASE("random bipartite graphs agree with the reference") {
        std::mt19937_64 rng(75);
        for (int rep = 0; rep < 50; ++rep) {
            Graph g = gen_random_bipartite(1 + static_cast<int>(rng() % 4),
                                           1 + static_cast<int>(rng() % 4), 0.5, rng());
            auto out = enum_mds_kt_plus_k2(g)->collect();
            CHECK(duplicate_free(out));
            CHECK(to_family(out) == ref_mds_all(g));
        }
    }
    SUBCASE("arbitrary random graphs agree with the reference") {
        std::mt19937_64 rng(76);
        for (int rep = 0; rep < 60; ++rep) {
            int n = 1 + static_cast<int>(rng() % 7);
            Graph g = random_graph(n, 0.45, rng);
            auto out = enum_mds_kt_plus_k2(g)->collect();
            CHECK(duplicate_free(out));
            CHECK(to_family(out) == ref_mds_all(g));
        }
    }
}

TEST_CASE("enum_mds_diamond_free") {
    SUBCASE("random trees agree with the reference") {
        std::mt19937_64 rng(77);
        for (int rep = 0; rep < 40; ++rep) {
            int n = 2 + static_cast<int>(rng() % 7);
            std::vector<std::pair<int, int>> e;
            for (int v = 1; v < n; ++v) e.emplace_back(v, static_cast<int>(rng() % v));
            Graph g(n, e);
            BicoloredGraph bg(g, VertexSet::full(n));
            auto out = enum_mds_diamond_free(bg)->collect();
            CHECK(duplicate_free(out));
            CHECK(to_family(out) == ref_mds_all(g));
        }
    }
    SUBCASE("disjoint cliques: one vertex per clique") {
        Graph g = gen_disjoint_cliques({3, 2, 3});
        BicoloredGraph bg(g, VertexSet::full(8));
        auto out = enum_mds_diamond_free(bg)->collect();
        CHECK(out.size() == 3 * 2 * 3);
        CHECK(to_family(out) == ref_mds_all(g));
    }
    SUBCASE("random diamond-free graphs, including bicolored") {
        std::mt19937_64 rng(78);
        int tested = 0;
        for (int rep = 0; rep < 400 && tested < 60; ++rep) {
            int n = 2 + static_cast<int>(rng() % 6);
            Graph g = random_graph(n, 0.3, rng);
            if (!detect_classes(g).diamond_free) continue;
            ++tested;
            VertexSet a = (rep % 2) ? VertexSet::full(n) : random_subset(n, 0.7, rng);
            BicoloredGraph bg(g, a);
            auto out = enum_mds_diamond_free(bg)->collect();
            CHECK(duplicate_free(out));
            CHECK(to_family(out) == ref_mds(g, a));
        }
        CHECK(tested >= 40);
    }
    SUBCASE("diamond raises a class violation") {
        Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
        CHECK_THROWS_AS(enum_mds_diamond_free(BicoloredGraph(diamond, VertexSet::full(4))),
                        ClassViolation);
    }
}

TEST_CASE("enum_mds_paw_free") {
    SUBCASE("complete multipartite graphs") {
        for (auto parts : std::vector<std::vector<int>>{{2, 2}, {1, 3}, {2, 2, 2}, {1, 2, 3}, {3, 3}}) {
            Graph g = gen_complete_multipartite(parts);
            BicoloredGraph bg(g, VertexSet::full(g.vertex_count()));
            auto out = enum_mds_paw_free(bg)->collect();
            CHECK(duplicate_free(out));
            CHECK(to_family(out) == ref_mds_all(g));
        }
    }
    SUBCASE("triangle-free graphs: agreement with the triangle-free enumerator") {
        std::mt19937_64 rng(79);
        int tested = 0;
        for (int rep = 0; rep < 300 && tested < 50; ++rep) {
            int n = 2 + static_cast<int>(rng() % 6);
            Graph g = random_graph(n, 0.3, rng);
            if (!detect_classes(g).triangle_free) continue;
            ++tested;
            BicoloredGraph bg(g, VertexSet::full(n));
            auto paw = enum_mds_paw_free(bg)->collect();
            auto tf = enum_mds_triangle_free(bg)->collect();
            CHECK(duplicate_free(paw));
            CHECK(to_family(paw) == to_family(tf));
            CHECK(to_family(paw) == ref_mds_all(g));
        }
        CHECK(tested >= 30);
    }
    SUBCASE("C5") {
        BicoloredGraph bg(cycle_graph(5), VertexSet::full(5));
        auto out = enum_mds_paw_free(bg)->collect();
        CHECK(duplicate_free(out));
        CHECK(to_family(out) == ref_mds_all(bg.graph));
    }
    SUBCASE("random paw-free graphs, including bicolored") {
        std::mt19937_64 rng(80);
        int tested = 0;
        for (int rep = 0; rep < 400 && tested < 60; ++rep) {
            int n = 2 + static_cast<int>(rng() % 7);
            Graph g = random_graph(n, 0.3, rng);
            if (!detect_classes(g).paw_free) continue;
            ++tested;
            VertexSet a = (rep % 2) ? VertexSet::full(n) : random_subset(n, 0.7, rng);
            BicoloredGraph bg(g, a);
            auto out = enum_mds_paw_free(bg)->collect();
            CHECK(duplicate_free(out));
            CHECK(to_family(out) == ref_mds(g, a));
        }
        CHECK(tested >= 40);
    }
    SUBCASE("paw raises a class violation") {
        Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        CHECK_THROWS_AS(enum_mds_paw_free(BicoloredGraph(paw, VertexSet::full(4))), ClassViolation);
    }
}

TEST_CASE("cross-algorithm agreement on multi-class instances") {
    // C4, P4, C5, K_{2,3} and a star satisfy several hypotheses at once
    std::vector<Graph> graphs = {cycle_graph(4), path_graph(4), cycle_graph(5), complete_bipartite(2, 3),
                                 star_graph(4)};
    for (const Graph& g : graphs) {
        const int n = g.vertex_count();
        BicoloredGraph bg(g, VertexSet::full(n));
        auto expect = ref_mds_all(g);
        CHECK(to_family(enum_mds_general(bg)->collect()) == expect);
        CHECK(to_family(enum_mds_kt_plus_k2(g)->collect()) == expect);
        ClassReport rep = detect_classes(g);
        if (rep.triangle_free) CHECK(to_family(enum_mds_triangle_free(bg)->collect()) == expect);
        if (rep.paw_free) CHECK(to_family(enum_mds_paw_free(bg)->collect()) == expect);
        if (rep.diamond_free) CHECK(to_family(enum_mds_diamond_free(bg)->collect()) == expect);
    }
}
