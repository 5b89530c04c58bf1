#include "doctest.h"
#include "oracles.hpp"

#include "sombor/enumeration.hpp"
#include "sombor/families.hpp"
#include "sombor/matching.hpp"

#include <random>
#include <set>

using namespace sombor;

namespace {

Graph random_unicyclic(std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<Edge> es;
        for (Vertex v = 1; v < n; ++v) es.emplace_back(static_cast<Vertex>(rng() % v), v);
        Edge extra(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
        if (extra.u == extra.v || std::find(es.begin(), es.end(), extra) != es.end()) continue;
        es.push_back(extra);
        return Graph::from_edges(n, es);
    }
}

}  // namespace

TEST_CASE("matching_number on named graphs") {
    CHECK(matching_number(build_path(5)) == 2);
    CHECK(matching_number(build_cycle(7)) == 3);
    CHECK(matching_number(build_T(10, 4)) == 4);
    CHECK(matching_number(build_star(6)) == 1);
    CHECK(matching_number(Graph::from_edges(1, {})) == 0);
    CHECK(matching_number(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 2);
}

TEST_CASE("matching_number rejects graphs with two cycles") {
    Graph k4 = parse_graph6("C~");
    CHECK_THROWS_AS(matching_number(k4), UnsupportedGraphClass);
    CHECK_THROWS_AS(maximum_matching(k4), UnsupportedGraphClass);
    CHECK_THROWS_AS(has_perfect_matching(k4), UnsupportedGraphClass);
}

TEST_CASE("maximum_matching witnesses") {
    CHECK(maximum_matching(build_path(4)).edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(maximum_matching(build_star(4)).size() == 1);
    auto c4 = maximum_matching(build_cycle(4));
    CHECK(c4.size() == 2);
    CHECK(c4.saturated() == std::vector<Vertex>{0, 1, 2, 3});
    // Deterministic: same graph, same witness.
    Graph u = build_U(11, 4);
    CHECK(maximum_matching(u) == maximum_matching(u));
}

TEST_CASE("Matching rejects overlapping edges") {
    CHECK_THROWS_AS(Matching(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    Matching m(4, {{2, 3}, {0, 1}});
    CHECK(m.is_saturated(3));
    CHECK(m.edges().front() == Edge(0, 1));
}

TEST_CASE("has_perfect_matching") {
    CHECK(has_perfect_matching(build_path(6)));
    CHECK_FALSE(has_perfect_matching(build_star(4)));
    CHECK(has_perfect_matching(build_U(6, 3)));
    CHECK_FALSE(has_perfect_matching(build_path(5)));
}

TEST_CASE("brute force oracle") {
    CHECK(brute_force_matching_number(build_path(5)) == 2);
    CHECK(brute_force_matching_number(parse_graph6("C~")) == 2);
    CHECK(brute_force_matching_number(Graph::from_edges(2, {})) == 0);
    std::vector<Edge> many;
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = u + 1; v < 8; ++v) many.emplace_back(u, v);
    CHECK_THROWS_AS(brute_force_matching_number(Graph::from_edges(8, many)), std::invalid_argument);
}

TEST_CASE("fast matching agrees with the oracle on 500 random unicyclic graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = random_unicyclic(rng, 3 + static_cast<int>(rng() % 10));
        REQUIRE(is_unicyclic(g));
        auto witness = maximum_matching(g);
        CHECK(matching_number(g) == brute_force_matching_number(g));
        CHECK(witness.size() == matching_number(g));
        for (const Edge& e : witness.edges()) CHECK(g.has_edge(e.u, e.v));
    }
}

TEST_CASE("matching number bounds on connected graphs") {
    for (int n = 2; n <= 9; ++n) {
        for_each_tree(n, [&](const Graph& t) {
            auto m = matching_number(t);
            CHECK(m >= 1);
            CHECK(2 * m <= static_cast<std::size_t>(n));
        });
    }
}

TEST_CASE("for_each_maximum_matching lists every maximum matching once") {
    // C6 has exactly two perfect matchings; P4 one; the star on 5 has four maximum matchings.
    auto count = [](const Graph& g) {
        std::set<std::vector<Edge>> seen;
        std::size_t calls = 0;
        for_each_maximum_matching(g, [&](const Matching& m) {
            ++calls;
            seen.insert(m.edges());
            CHECK(m.size() == brute_force_matching_number(g));
            return true;
        });
        CHECK(seen.size() == calls);
        return calls;
    };
    CHECK(count(build_cycle(6)) == 2);
    CHECK(count(build_path(4)) == 1);
    CHECK(count(build_star(5)) == 4);
    CHECK(count(parse_graph6("C~")) == 3);

    std::size_t stopped = 0;
    for_each_maximum_matching(build_star(5), [&](const Matching&) {
        ++stopped;
        return false;
    });
    CHECK(stopped == 1);
}

TEST_CASE("family members have matching number m") {
    for (int n = 4; n <= 20; ++n) {
        for (int m = 2; 2 * m <= n; ++m) {
            CHECK(matching_number(build_T(n, m)) == static_cast<std::size_t>(m));
            CHECK(matching_number(build_U(n, m)) == static_cast<std::size_t>(m));
        }
    }
}
