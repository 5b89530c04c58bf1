#include "sombor/matching.hpp"

#include <algorithm>

namespace sombor {

namespace {

// Lowest-label leaf peeling; exact on forests.
std::vector<Edge> peel_forest(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg = g.degree_sequence();
    std::vector<char> removed(n, 0);
    std::vector<Edge> out;
    auto drop = [&](Vertex x) {
        removed[x] = 1;
        for (Vertex w : g.neighbors(x))
            if (!removed[w]) --deg[w];
    };
    for (;;) {
        Vertex leaf = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!removed[v] && deg[v] == 1) {
                leaf = v;
                break;
            }
        }
        if (leaf < 0) break;
        Vertex partner = -1;
        for (Vertex w : g.neighbors(leaf)) {
            if (!removed[w]) {
                partner = w;
                break;
            }
        }
        out.emplace_back(leaf, partner);
        drop(leaf);
        drop(partner);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> max_matching_edges(const Graph& g) {
    auto cycle = cycle_edges(g);
    if (cycle.empty()) return peel_forest(g);
    const Edge e = cycle.front();
    auto skip = peel_forest(g.without_edge(e));
    const Vertex both[] = {e.u, e.v};
    auto take = peel_forest(g.isolating(both));
    if (take.size() + 1 > skip.size()) {
        take.push_back(e);
        std::sort(take.begin(), take.end());
        return take;
    }
    return skip;
}

struct MatchingSearch {
    const Graph& g;
    std::vector<char> used;
    std::vector<Edge> current;
    std::size_t best = 0;
    std::size_t target = 0;
    const std::function<bool(const Matching&)>* visit = nullptr;
    bool stop = false;

    // Vertices >= from that are still free.
    int free_from(Vertex from) const {
        int count = 0;
        for (Vertex v = from; v < g.order(); ++v) count += used[v] ? 0 : 1;
        return count;
    }

    void maximize(Vertex v) {
        best = std::max(best, current.size());
        while (v < g.order() && used[v]) ++v;
        if (v >= g.order()) return;
        if (current.size() + static_cast<std::size_t>(free_from(v)) / 2 <= best) return;
        used[v] = 1;
        for (Vertex w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = 1;
            current.emplace_back(v, w);
            maximize(v + 1);
            current.pop_back();
            used[w] = 0;
        }
        // v stays unmatched; keep it marked so later vertices cannot take it.
        maximize(v + 1);
        used[v] = 0;
    }

    void list(Vertex v) {
        if (stop) return;
        while (v < g.order() && used[v]) ++v;
        if (current.size() == target) {
            Matching m(g.order(), current);
            if (!(*visit)(m)) stop = true;
            return;
        }
        if (v >= g.order()) return;
        if (current.size() + static_cast<std::size_t>(free_from(v)) / 2 < target) return;
        used[v] = 1;
        for (Vertex w : g.neighbors(v)) {
            if (used[w] || stop) continue;
            used[w] = 1;
            current.emplace_back(v, w);
            list(v + 1);
            current.pop_back();
            used[w] = 0;
        }
        list(v + 1);
        used[v] = 0;
    }
};

}  // namespace

Matching::Matching(int order, std::vector<Edge> edges) : edges_(std::move(edges)), saturated_(order, 0) {
    std::sort(edges_.begin(), edges_.end());
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= order) throw std::invalid_argument("matching edge outside the graph");
        if (saturated_[e.u] || saturated_[e.v]) throw std::invalid_argument("matching edges share a vertex");
        saturated_[e.u] = saturated_[e.v] = 1;
    }
}

std::vector<Vertex> Matching::saturated() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(saturated_.size()); ++v)
        if (saturated_[v]) out.push_back(v);
    return out;
}

std::size_t matching_number(const Graph& g) { return max_matching_edges(g).size(); }

Matching maximum_matching(const Graph& g) { return Matching(g.order(), max_matching_edges(g)); }

bool has_perfect_matching(const Graph& g) {
    return g.order() % 2 == 0 && 2 * matching_number(g) == static_cast<std::size_t>(g.order());
}

std::size_t brute_force_matching_number(const Graph& g) {
    if (g.size() > kBruteForceEdgeLimit)
        throw std::invalid_argument("brute_force_matching_number: more than 24 edges");
    MatchingSearch s{g, std::vector<char>(g.order(), 0), {}};
    s.maximize(0);
    return s.best;
}

void for_each_maximum_matching(const Graph& g, const std::function<bool(const Matching&)>& visit) {
    if (g.order() > 24) throw std::invalid_argument("for_each_maximum_matching: more than 24 vertices");
    MatchingSearch s{g, std::vector<char>(g.order(), 0), {}};
    s.maximize(0);
    s.target = s.best;
    s.visit = &visit;
    s.list(0);
}

}  // namespace sombor
