#include "doctest.h"

#include <random>

#include "domset/peeling.hpp"
#include "test_util.hpp"

using namespace domset;
using namespace testutil;

TEST_CASE("peeling of the path, smallest-index choice") {
    BicoloredGraph bg(path_graph(4), VertexSet::full(4));
    Peeling p = compute_peeling(bg);
    REQUIRE(p.depth() == 2);
    CHECK(p.level(0) == VertexSet{});
    CHECK(p.level(1) == VertexSet{2, 3});
    CHECK(p.level(2) == VertexSet{0, 1, 2, 3});
    CHECK(p.vertex_sequence == std::vector<int>{2, 0});
    CHECK(validate_peeling(bg, p));
}

TEST_CASE("peeling of an empty prescribed set") {
    BicoloredGraph bg(path_graph(3), VertexSet{});
    Peeling p = compute_peeling(bg);
    CHECK(p.depth() == 0);
    REQUIRE(p.levels.size() == 1);
    CHECK(p.level(0) == VertexSet{});
    CHECK(validate_peeling(bg, p));
}

TEST_CASE("peeling of K3 takes one step") {
    BicoloredGraph bg(complete_graph(3), VertexSet::full(3));
    Peeling p = compute_peeling(bg);
    REQUIRE(p.depth() == 1);
    CHECK(p.level(1) == VertexSet::full(3));
    CHECK(p.vertex_sequence == std::vector<int>{0});
}

TEST_CASE("validate_peeling rejects corrupted peelings") {
    BicoloredGraph bg(path_graph(4), VertexSet::full(4));
    Peeling p = compute_peeling(bg);

    Peeling bad0 = p;
    bad0.levels[0] = VertexSet{0};
    CHECK(!validate_peeling(bg, bad0));

    Peeling bad_seq = p;
    bad_seq.vertex_sequence = {0, 2}; // levels no longer match V_{i-1} = V_i \ N[v_i]
    CHECK(!validate_peeling(bg, bad_seq));

    Peeling bad_top = p;
    bad_top.levels.back() = VertexSet{0, 1, 2};
    CHECK(!validate_peeling(bg, bad_top));
}

TEST_CASE("peelings of random graphs validate and partition A") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 500; ++rep) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(n, 0.3, rng);
        VertexSet a = (rep % 3 == 0) ? VertexSet::full(n) : random_subset(n, 0.6, rng);
        BicoloredGraph bg(g, a);
        Peeling p = compute_peeling(bg);
        CHECK(validate_peeling(bg, p));
        CHECK(p.depth() <= a.size());

        // the slices N[v_i] cap V_i partition A
        VertexSet seen;
        for (int i = 1; i <= p.depth(); ++i) {
            VertexSet slice = set_intersect(closed_neighborhood(g, p.peel_vertex(i)), p.level(i));
            CHECK(set_intersect(seen, slice).empty());
            seen = set_union(seen, slice);
        }
        CHECK(seen == a);

        // determinism
        Peeling p2 = compute_peeling(bg);
        CHECK(p2.levels == p.levels);
        CHECK(p2.vertex_sequence == p.vertex_sequence);
    }
}
