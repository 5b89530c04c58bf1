#include "doctest.h"
#include "oracles.hpp"

#include "sombor/canonical.hpp"
#include "sombor/enumeration.hpp"
#include "sombor/families.hpp"
#include "sombor/matching.hpp"

#include <map>
#include <random>
#include <set>

using namespace sombor;

namespace {

// Free trees on n = 1..18 vertices.
constexpr std::size_t kTreeCounts[] = {0,    1,    1,    1,     2,     3,     6,     11,    23,    47,
                                       106,  235,  551,  1301,  3159,  7741,  19320, 48629, 123867};
// Connected unicyclic graphs on n = 3..12 vertices, from an independent
// tree-plus-edge enumeration with isomorphism dedup.
const std::map<int, std::size_t> kUnicyclicCounts = {{3, 1},   {4, 2},   {5, 5},    {6, 13},   {7, 33},
                                                     {8, 89},  {9, 240}, {10, 657}, {11, 1806}, {12, 5026}, {13, 13999}};
// Rooted trees on s = 1..12 vertices.
constexpr std::size_t kRootedCounts[] = {0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766};

}  // namespace

TEST_CASE("tree counts") {
    CHECK(enumerate_trees(4).size() == 2);
    CHECK(enumerate_trees(7).size() == 11);
    CHECK(enumerate_trees(12).size() == 551);
    for (int n = 1; n <= 16; ++n) {
        std::size_t count = 0;
        for_each_tree(n, [&](const Graph&) { ++count; });
        CHECK_MESSAGE(count == kTreeCounts[n], "n=" << n);
    }
    CHECK_THROWS_AS(TreeGenerator(0), EnumerationLimit);
    CHECK_THROWS_AS(TreeGenerator(19), EnumerationLimit);
}

TEST_CASE("rooted tree counts") {
    for (int s = 1; s <= 12; ++s) CHECK(rooted_trees(s).size() == kRootedCounts[s]);
}

TEST_CASE("unicyclic counts") {
    CHECK(enumerate_unicyclic(3).size() == 1);
    CHECK(enumerate_unicyclic(4).size() == 2);
    for (auto [n, expected] : kUnicyclicCounts) CHECK_MESSAGE(enumerate_unicyclic(n).size() == expected, "n=" << n);
    CHECK_THROWS_AS(enumerate_unicyclic(2), EnumerationLimit);
    CHECK_THROWS_AS(enumerate_unicyclic(15), EnumerationLimit);
}

TEST_CASE("shards partition the unicyclic stream") {
    for (int n = 3; n <= 10; ++n) {
        std::size_t total = 0;
        for (int k = 3; k <= n; ++k)
            for_each_unicyclic(n, [&](const Graph& g) {
                CHECK(cycle_order(g).size() == static_cast<std::size_t>(k));
                ++total;
            }, k);
        CHECK(total == enumerate_unicyclic(n).size());
    }
}

TEST_CASE("enumerated graphs are in class and pairwise non-isomorphic") {
    for (int n = 1; n <= 14; ++n) {
        std::set<CanonicalCode> codes;
        for_each_tree(n, [&](const Graph& t) {
            CHECK(is_tree(t));
            CHECK(codes.insert(canonical_code(t)).second);
        });
    }
    for (int n = 3; n <= 12; ++n) {
        std::set<CanonicalCode> codes;
        for_each_unicyclic(n, [&](const Graph& u) {
            CHECK(is_unicyclic(u));
            CHECK(codes.insert(canonical_code(u)).second);
        });
    }
}

TEST_CASE("enumeration order is deterministic") {
    auto a = enumerate_unicyclic(9);
    auto b = enumerate_unicyclic(9);
    CHECK(a == b);
    CHECK(enumerate_trees(11) == enumerate_trees(11));
}

TEST_CASE("tree counts match Pruefer generation with oracle dedup for n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        auto reps = oracle::dedup_by_oracle(oracle::labeled_trees(n));
        CHECK_MESSAGE(reps.size() == enumerate_trees(n).size(), "n=" << n);
    }
}

TEST_CASE("unicyclic counts match labeled generation with oracle dedup for n <= 7") {
    for (int n = 3; n <= 7; ++n) {
        auto reps = oracle::dedup_by_oracle(oracle::labeled_unicyclic(n));
        CHECK_MESSAGE(reps.size() == enumerate_unicyclic(n).size(), "n=" << n);
    }
}

TEST_CASE("canonical_code on small examples") {
    Graph p4 = build_path(4);
    std::vector<Vertex> perm{2, 0, 3, 1};
    CHECK(canonical_code(p4) == canonical_code(p4.relabeled(perm)));
    CHECK(canonical_code(p4) != canonical_code(build_star(4)));
    CHECK(canonical_code(p4).to_string().starts_with("T:"));

    std::mt19937_64 rng(99);
    Graph u = build_U(6, 3);
    for (int i = 0; i < 20; ++i) CHECK(canonical_code(u) == canonical_code(oracle::random_relabel(u, rng)));
    CHECK(canonical_code(u).to_string().starts_with("U:"));
    CHECK_THROWS_AS(canonical_code(parse_graph6("C~")), UnsupportedGraphClass);
    CHECK_THROWS_AS(canonical_code(Graph::from_edges(4, {{0, 1}, {2, 3}})), UnsupportedGraphClass);
}

TEST_CASE("canonical_code equality matches the isomorphism oracle for n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<Graph> pool = oracle::labeled_trees(n);
        if (n >= 3) {
            auto u = oracle::labeled_unicyclic(n);
            pool.insert(pool.end(), u.begin(), u.end());
        }
        // Group all labeled graphs by code; each group must be one class and
        // distinct groups must be non-isomorphic.
        std::map<CanonicalCode, std::vector<Graph>> groups;
        for (const Graph& g : pool) groups[canonical_code(g)].push_back(g);
        std::vector<Graph> reps;
        for (const auto& [code, members] : groups) {
            for (std::size_t i = 1; i < members.size(); i += 1 + members.size() / 40)
                CHECK(are_isomorphic_oracle(members.front(), members[i]));
            reps.push_back(members.front());
        }
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(are_isomorphic_oracle(reps[i], reps[j]));
    }
}

TEST_CASE("isomorphism oracle") {
    Graph p4 = build_path(4);
    std::vector<Vertex> perm{1, 3, 0, 2};
    CHECK(are_isomorphic_oracle(p4, p4.relabeled(perm)));
    CHECK_FALSE(are_isomorphic_oracle(p4, build_star(4)));
    CHECK_FALSE(are_isomorphic_oracle(build_cycle(6), Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
    CHECK_THROWS_AS(are_isomorphic_oracle(build_path(9), build_path(9)), std::invalid_argument);
}

TEST_CASE("partition_by_matching") {
    auto parts = partition_by_matching(enumerate_trees(4));
    REQUIRE(parts.size() == 2);
    CHECK(parts[1].size() == 1);
    CHECK(are_isomorphic_oracle(parts[1].front(), build_star(4)));
    CHECK(parts[2].size() == 1);
    CHECK(are_isomorphic_oracle(parts[2].front(), build_path(4)));

    auto six = partition_by_matching(enumerate_trees(6));
    std::size_t total = 0;
    for (const auto& [m, group] : six) {
        CHECK(m >= 1);
        CHECK(m <= 3);
        total += group.size();
    }
    CHECK(total == 6);

    for (int m = 2; m <= 6; ++m) {
        auto groups = partition_by_matching(enumerate_unicyclic(2 * m));
        const auto want = canonical_code(build_cycle(2 * m));
        bool found = false;
        for (const Graph& g : groups[m]) found = found || canonical_code(g) == want;
        CHECK(found);
    }
}

TEST_CASE("tree_from_levels") {
    CHECK(tree_from_levels({0, 1, 2, 1}) == Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}}));
    CHECK_THROWS_AS(tree_from_levels({0, 2}), GraphError);
    CHECK_THROWS_AS(tree_from_levels({1}), GraphError);
}
