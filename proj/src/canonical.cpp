#include "sombor/canonical.hpp"

#include <algorithm>
#include <vector>

namespace sombor {

namespace {

std::string rooted_code_from(const Graph& g, Vertex v, Vertex parent, const std::vector<char>& blocked) {
    std::vector<std::string> children;
    for (Vertex w : g.neighbors(v)) {
        if (w == parent || blocked[w]) continue;
        children.push_back(rooted_code_from(g, w, v, blocked));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ')';
    return out;
}

std::vector<Vertex> tree_centers(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg = g.degree_sequence();
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    std::vector<char> removed(n, 0);
    while (remaining > 2) {
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            removed[v] = 1;
            --remaining;
            for (Vertex w : g.neighbors(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<Vertex> centers;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

bool extend(const Graph& a, const Graph& b, std::vector<Vertex>& map, std::vector<char>& taken, Vertex v) {
    if (v == a.order()) return true;
    for (Vertex c = 0; c < b.order(); ++c) {
        if (taken[c] || a.degree(v) != b.degree(c)) continue;
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(map[u], c);
        if (!ok) continue;
        map[v] = c;
        taken[c] = 1;
        if (extend(a, b, map, taken, v + 1)) return true;
        taken[c] = 0;
    }
    return false;
}

}  // namespace

std::string CanonicalCode::to_string() const {
    return (kind == GraphKind::Tree ? "T:" : "U:") + code;
}

std::string rooted_code(const Graph& g, Vertex root, const std::vector<char>& blocked) {
    return rooted_code_from(g, root, -1, blocked);
}

CanonicalCode canonical_code(const Graph& g) {
    const std::vector<char> none(g.order(), 0);
    if (is_tree(g)) {
        std::string best;
        for (Vertex c : tree_centers(g)) {
            std::string code = rooted_code(g, c, none);
            if (best.empty() || code < best) best = std::move(code);
        }
        return {GraphKind::Tree, best};
    }
    if (!is_unicyclic(g)) throw UnsupportedGraphClass("canonical_code: graph is neither a tree nor unicyclic");

    auto cycle = cycle_order(g);
    const std::size_t k = cycle.size();
    std::vector<char> on_cycle(g.order(), 0);
    for (Vertex v : cycle) on_cycle[v] = 1;
    std::vector<std::string> hanging;
    hanging.reserve(k);
    for (Vertex v : cycle) {
        // The root itself is on the cycle; only its off-cycle branches count.
        std::vector<char> blocked = on_cycle;
        blocked[v] = 0;
        hanging.push_back(rooted_code(g, v, blocked));
    }
    std::vector<std::string> best;
    std::vector<std::string> candidate(k);
    for (std::size_t start = 0; start < k; ++start) {
        for (int dir : {1, -1}) {
            for (std::size_t i = 0; i < k; ++i) {
                candidate[i] = hanging[dir > 0 ? (start + i) % k : (start + k - i) % k];
            }
            if (best.empty() || candidate < best) best = candidate;
        }
    }
    std::string code;
    for (const auto& s : best) code += s;
    return {GraphKind::Unicyclic, code};
}

bool are_isomorphic_oracle(const Graph& a, const Graph& b) {
    if (a.order() > kIsomorphismOracleLimit || b.order() > kIsomorphismOracleLimit)
        throw std::invalid_argument("are_isomorphic_oracle: order above 8");
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degree_sequence(), db = b.degree_sequence();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<Vertex> map(a.order(), -1);
    std::vector<char> taken(b.order(), 0);
    return extend(a, b, map, taken, 0);
}

}  // namespace sombor
