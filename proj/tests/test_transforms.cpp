#include "doctest.h"

#include "sombor/families.hpp"
#include "sombor/indices.hpp"
#include "sombor/matching.hpp"
#include "sombor/transforms.hpp"

using namespace sombor;

TEST_CASE("neighbor_shift on P4 gives the star") {
    Graph p4 = build_path(4);
    Graph after = neighbor_shift(p4, {1, 2});
    CHECK(after.degree(1) == 3);
    CHECK(sombor_exact(p4).same_terms(RadicalSum{{5, 2}, {8, 1}}));
    CHECK(sombor_exact(after).same_terms(RadicalSum{{10, 3}}));
    CHECK(compare_exact(sombor_exact(after), sombor_exact(p4)) == std::strong_ordering::greater);
}

TEST_CASE("neighbor_shift on P5") {
    Graph p5 = build_path(5);
    Graph after = neighbor_shift(p5, {1, 2});
    auto d = after.degree_sequence();
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{1, 1, 1, 2, 3});
    CHECK(sombor_exact(after).same_terms(RadicalSum{{10, 2}, {13, 1}, {5, 1}}));
    CHECK(sombor_value(after) == doctest::Approx(12.16617457330054).epsilon(1e-14));
    CHECK(sombor_value(p5) == doctest::Approx(10.12899020449196).epsilon(1e-14));
}

TEST_CASE("neighbor_shift on C4 produces the paw") {
    // Adjacent C4 vertices have disjoint neighborhoods, so the shift is legal.
    Graph after = neighbor_shift(build_cycle(4), {0, 1});
    CHECK(after.degree(0) == 3);
    CHECK(after.degree(1) == 1);
    CHECK(sombor_exact(after).same_terms(RadicalSum{{10, 1}, {13, 2}, {8, 1}}));
    CHECK(compare_exact(sombor_exact(after), sombor_exact(build_cycle(4))) == std::strong_ordering::greater);
}

TEST_CASE("neighbor_shift preconditions") {
    Graph p4 = build_path(4);
    CHECK_THROWS_WITH_AS(neighbor_shift(p4, {0, 2}), doctest::Contains("not an edge"), TransformError);
    CHECK_THROWS_WITH_AS(neighbor_shift(p4, {0, 1}), doctest::Contains("u0 has no neighbor"), TransformError);
    CHECK_THROWS_WITH_AS(neighbor_shift(p4, {1, 0}), doctest::Contains("v0 has no neighbor"), TransformError);
    CHECK_THROWS_AS(neighbor_shift(p4, {1, 9}), TransformError);
    // A triangle edge: endpoints share the third vertex, so moving it would duplicate an edge.
    Graph c3 = build_cycle(3);
    CHECK_THROWS_WITH_AS(neighbor_shift(c3, {0, 1}), doctest::Contains("share neighbor 2"), TransformError);
    CHECK_FALSE(is_valid_shift(c3, {0, 1}));
    CHECK(is_valid_shift(p4, {1, 2}));
}

TEST_CASE("cycle_rewire") {
    Graph c5 = build_cycle(5);
    Graph r = cycle_rewire(c5, 0);
    // Edge 0-1 replaced by 0-2: cycle 0 2 3 4, vertex 1 pendant on 2.
    CHECK_FALSE(r.has_edge(0, 1));
    CHECK(r.has_edge(0, 2));
    CHECK(r.degree(1) == 1);
    CHECK(r.degree(2) == 3);
    CHECK(is_unicyclic(r));
    CHECK(cycle_order(r).size() == 4);

    CHECK_THROWS_AS(cycle_rewire(build_cycle(3), 0), TransformError);
    CHECK_THROWS_AS(cycle_rewire(build_path(5), 0), TransformError);
    CHECK_THROWS_AS(cycle_rewire(c5, 5), TransformError);
}

TEST_CASE("cycle_rewire on the sun over C4 increases the Sombor index") {
    Graph sun = build_sun(4);
    Graph r = cycle_rewire(sun, 0);
    CHECK(sombor_exact(sun).same_terms(RadicalSum{{18, 4}, {10, 4}}));
    CHECK(sombor_exact(r).same_terms(RadicalSum{{18, 1}, {10, 2}, {25, 2}, {20, 1}, {5, 1}, {17, 1}}));
    CHECK(compare_exact(sombor_exact(r), sombor_exact(sun)) == std::strong_ordering::greater);
    CHECK(sombor_value(r) == doctest::Approx(31.398505565573075).epsilon(1e-14));
}

TEST_CASE("cycle_rewire on suns shortens the cycle and raises the index") {
    for (int k = 4; k <= 10; ++k) {
        Graph sun = build_sun(k);
        for (int i = 0; i < k; ++i) {
            Graph r = cycle_rewire(sun, i);
            CHECK(cycle_order(r).size() == static_cast<std::size_t>(k - 1));
            CHECK(compare_exact(sombor_exact(r), sombor_exact(sun)) == std::strong_ordering::greater);
        }
    }
}

TEST_CASE("cycle_rewire raises the index on pendant-decorated cycles at a matched cycle edge") {
    // Cycle C_k with pendants on a subset of cycle vertices, perfect matching,
    // fewer pendants than cycle vertices; rewire at a cycle edge whose
    // endpoints carry no pendant (such an edge lies in the perfect matching).
    std::size_t instances = 0;
    for (int k = 4; k <= 10; ++k) {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<Edge> es;
            for (Vertex v = 0; v < k; ++v) es.emplace_back(v, (v + 1) % k);
            Vertex next = k;
            for (Vertex v = 0; v < k; ++v)
                if (mask & (1u << v)) es.emplace_back(v, next++);
            if (next == 2 * k) continue;  // the sun itself
            Graph g = Graph::from_edges(next, es);
            if (!has_perfect_matching(g)) continue;
            auto cycle = cycle_order(g);
            for (int i = 0; i < k; ++i) {
                const Vertex a = cycle[i], b = cycle[(i + 1) % k];
                if (g.degree(a) != 2 || g.degree(b) != 2) continue;
                ++instances;
                Graph r = cycle_rewire(g, i);
                CHECK(compare_exact(sombor_exact(r), sombor_exact(g)) == std::strong_ordering::greater);
            }
        }
    }
    CHECK(instances > 100);
}
