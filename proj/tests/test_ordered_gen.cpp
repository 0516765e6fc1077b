#include "doctest.h"

#include <random>

#include "domset/extensions.hpp"
#include "domset/oracle.hpp"
#include "domset/ordered_gen.hpp"
#include "test_util.hpp"

using namespace domset;
using namespace testutil;

namespace {

StreamPtr tf_provider(const ExtensionContext& ctx) { return extensions_triangle_free(ctx); }

} // namespace

TEST_CASE("parent on the path peeling") {
    BicoloredGraph bg(path_graph(4), VertexSet::full(4));
    Peeling p = compute_peeling(bg); // levels {}, {2,3}, V; sequence (2, 0)

    SUBCASE("vertex without private in the lower level is removed") {
        auto [d_star, lvl] = parent(bg, p, VertexSet{0, 2}, 2);
        CHECK(d_star == VertexSet{2});
        CHECK(lvl == 1);
    }
    SUBCASE("at i = 1 everything is removed (V_0 is empty)") {
        for (const auto& d : ref_mds(bg.graph, p.level(1))) {
            auto [d_star, lvl] = parent(bg, p, VertexSet(d), 1);
            CHECK(d_star == VertexSet{});
            CHECK(lvl == 0);
        }
    }
    SUBCASE("already-minimal set is unchanged") {
        // P3 peels to ({}, {2}, V) with sequence (2, 0); {1} dominates V_2
        // and keeps a private in V_1 = {2}, so nothing is removed.
        BicoloredGraph bg3(path_graph(3), VertexSet::full(3));
        Peeling p3 = compute_peeling(bg3);
        REQUIRE(p3.level(1) == VertexSet{2});
        auto [d_star, lvl] = parent(bg3, p3, VertexSet{1}, 2);
        CHECK(d_star == VertexSet{1});
        CHECK(lvl == 1);
    }
    SUBCASE("violating the precondition is a contract error") {
        CHECK_THROWS_AS(parent(bg, p, VertexSet{0}, 2), ContractViolation);
    }
}

TEST_CASE("parent lands in D(G, V_{i-1}) on random instances") {
    std::mt19937_64 rng(51);
    for (int rep = 0; rep < 120; ++rep) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.4, rng);
        VertexSet a = (rep % 2) ? VertexSet::full(n) : random_subset(n, 0.7, rng);
        BicoloredGraph bg(g, a);
        Peeling p = compute_peeling(bg);
        for (int i = 1; i <= p.depth(); ++i) {
            auto fam = ref_mds(g, p.level(i));
            for (const auto& d : fam) {
                auto [d_star, lvl] = parent(bg, p, VertexSet(d), i);
                CHECK(lvl == i - 1);
                CHECK(ref_minimal_dominating(g, d_star.members(), p.level(i - 1).members()));
            }
        }
    }
}

TEST_CASE("check_parent") {
    BicoloredGraph bg(path_graph(4), VertexSet::full(4));
    Peeling p = compute_peeling(bg);

    // parent-construction round trips: D* or D* + v_{i+1} is a child of D*
    for (int i = 0; i + 1 <= p.depth(); ++i) {
        for (const auto& dv : ref_mds(bg.graph, p.level(i))) {
            VertexSet d_star(dv);
            int v_next = p.peel_vertex(i + 1);
            if (ref_dominates(bg.graph, dv, p.level(i + 1).members())) {
                CHECK(check_parent(bg, p, d_star, i + 1, d_star));
            } else {
                CHECK(check_parent(bg, p, d_star.with(v_next), i + 1, d_star));
            }
        }
    }
    // non-dominating child fails
    CHECK(!check_parent(bg, p, VertexSet{0}, 2, VertexSet{}));
    // child attached under a different parent fails
    CHECK(check_parent(bg, p, VertexSet{0, 2}, 2, VertexSet{2}));
    CHECK(!check_parent(bg, p, VertexSet{0, 2}, 2, VertexSet{3}));
}

TEST_CASE("enumerate_ordered with the triangle-free provider") {
    SUBCASE("empty prescribed set short-circuits") {
        BicoloredGraph bg(path_graph(3), VertexSet{});
        auto out = enumerate_ordered(bg, tf_provider)->collect();
        REQUIRE(out.size() == 1);
        CHECK(out[0] == VertexSet{});
    }
    SUBCASE("path") {
        BicoloredGraph bg(path_graph(4), VertexSet::full(4));
        auto out = enumerate_ordered(bg, tf_provider)->collect();
        CHECK(duplicate_free(out));
        CHECK(to_family(out) == SetFamily{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    }
    SUBCASE("C4 has the six pairs") {
        BicoloredGraph bg(cycle_graph(4), VertexSet::full(4));
        auto out = enumerate_ordered(bg, tf_provider)->collect();
        CHECK(duplicate_free(out));
        CHECK(to_family(out) == ref_mds_all(bg.graph));
        CHECK(out.size() == 6);
    }
    SUBCASE("restartable and deterministic") {
        BicoloredGraph bg(cycle_graph(4), VertexSet::full(4));
        auto st = enumerate_ordered(bg, tf_provider);
        CHECK(st->collect() == st->collect());
    }
}

TEST_CASE("engine invariants via the observer") {
    struct Counter : OrderedGenObserver {
        long long max_produced = 0;
        void node_finished(int, const VertexSet&, long long produced) override {
            max_produced = std::max(max_produced, produced);
        }
    };
    std::mt19937_64 rng(52);
    for (int rep = 0; rep < 120; ++rep) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.35, rng);
        ClassReport cls = detect_classes(g);
        if (!cls.triangle_free) continue;
        BicoloredGraph bg(g, VertexSet::full(n));
        Counter obs;
        auto out = enumerate_ordered(bg, tf_provider, &obs)->collect();
        auto expect = ref_mds_all(g);
        CHECK(to_family(out) == expect);
        // no node produces more extensions than |D(G, A)|
        CHECK(obs.max_produced <= static_cast<long long>(expect.size()));

        // level counts never decrease along the peeling
        Peeling p = compute_peeling(bg);
        size_t prev = 1;
        for (int i = 1; i <= p.depth(); ++i) {
            size_t cur = ref_mds(g, p.level(i)).size();
            CHECK(prev <= cur);
            prev = cur;
        }
    }
}
