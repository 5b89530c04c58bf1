#pragma once

// Slow, independent reference implementations used only by the tests.

#include "sombor/canonical.hpp"
#include "sombor/graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace sombor::oracle {

/// Every labeled tree on n >= 2 vertices, decoded from all Pruefer sequences.
inline std::vector<Graph> labeled_trees(int n) {
    std::vector<Graph> out;
    if (n == 1) return {Graph::from_edges(1, {})};
    if (n == 2) return {Graph::from_edges(2, {{0, 1}})};
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        std::vector<int> degree(n, 1);
        for (int x : seq) ++degree[x];
        std::vector<Edge> es;
        for (int x : seq) {
            int leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            es.emplace_back(leaf, x);
            --degree[leaf];
            --degree[x];
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v) {
            if (degree[v] == 1) (a < 0 ? a : b) = v;
        }
        es.emplace_back(a, b);
        out.push_back(Graph::from_edges(n, es));

        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

/// Every labeled connected unicyclic graph on n >= 3 vertices (tree plus one edge).
inline std::vector<Graph> labeled_unicyclic(int n) {
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const Graph& t : labeled_trees(n)) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (t.has_edge(u, v)) continue;
                auto es = t.edges();
                es.emplace_back(u, v);
                Graph g = Graph::from_edges(n, es);
                if (seen.insert(write_graph6(g)).second) out.push_back(g);
            }
        }
    }
    return out;
}

/// One representative per isomorphism class, via the permutation-search oracle.
inline std::vector<Graph> dedup_by_oracle(const std::vector<Graph>& graphs) {
    std::map<std::vector<int>, std::vector<Graph>> buckets;
    std::vector<Graph> reps;
    for (const Graph& g : graphs) {
        auto key = g.degree_sequence();
        std::sort(key.begin(), key.end());
        auto& bucket = buckets[key];
        bool known = false;
        for (const Graph& r : bucket) {
            if (are_isomorphic_oracle(g, r)) {
                known = true;
                break;
            }
        }
        if (!known) {
            bucket.push_back(g);
            reps.push_back(g);
        }
    }
    return reps;
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
    std::vector<Vertex> perm(g.order());
    for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

/// graph6 decoder written against the bit-string definition: expand every
/// data byte into six characters '0'/'1', then read x(i,j) column by column.
inline std::vector<std::pair<int, int>> graph6_edges_by_bitstring(const std::string& s) {
    const int n = s[0] - 63;
    std::string bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        int x = s[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1 ? '1' : '0');
    }
    std::vector<std::pair<int, int>> out;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.at(k++) == '1') out.emplace_back(i, j);
    return out;
}

}  // namespace sombor::oracle
