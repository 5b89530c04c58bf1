#include "sombor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace sombor {

namespace {

std::string describe(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

int component_count(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    int components = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

constexpr int kGraph6Bias = 63;
constexpr int kGraph6MaxShort = 62;

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.adjacency_.resize(n);
    for (const Edge& raw : edges) {
        Edge e(raw.u, raw.v);
        if (e.u < 0 || e.v >= n)
            throw GraphError("edge " + describe(e) + " has a label outside [0," + std::to_string(n) + ")");
        if (e.u == e.v) throw GraphError("loop at edge " + describe(e));
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& nb = g.adjacency_[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end()) throw GraphError("duplicate edge " + describe(Edge(v, *dup)));
    }
    g.edge_count_ = edges.size();
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
        throw GraphError("vertex " + std::to_string(v) + " outside [0," + std::to_string(order()) + ")");
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> out;
    out.reserve(adjacency_.size());
    for (const auto& nb : adjacency_) out.push_back(static_cast<int>(nb.size()));
    return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != order()) throw GraphError("permutation size mismatch");
    std::vector<char> hit(order(), 0);
    for (Vertex p : perm) {
        check_vertex(p);
        if (hit[p]++) throw GraphError("not a permutation");
    }
    std::vector<Edge> es;
    es.reserve(edge_count_);
    for (const Edge& e : edges()) es.emplace_back(perm[e.u], perm[e.v]);
    return from_edges(order(), es);
}

Graph Graph::without_edge(Edge e) const {
    if (!has_edge(e.u, e.v)) throw GraphError("edge " + describe(e) + " not present");
    std::vector<Edge> es = edges();
    es.erase(std::find(es.begin(), es.end(), Edge(e.u, e.v)));
    return from_edges(order(), es);
}

Graph Graph::isolating(std::span<const Vertex> vs) const {
    std::vector<char> drop(order(), 0);
    for (Vertex v : vs) {
        check_vertex(v);
        drop[v] = 1;
    }
    std::vector<Edge> es;
    for (const Edge& e : edges())
        if (!drop[e.u] && !drop[e.v]) es.push_back(e);
    return from_edges(order(), es);
}

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

bool is_forest(const Graph& g) {
    return g.size() + static_cast<std::size_t>(component_count(g)) == static_cast<std::size_t>(g.order());
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.size() + 1 == static_cast<std::size_t>(g.order());
}

bool is_unicyclic(const Graph& g) {
    return is_connected(g) && g.size() == static_cast<std::size_t>(g.order());
}

std::vector<Edge> cycle_edges(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg = g.degree_sequence();
    std::vector<char> removed(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] <= 1) queue.push_back(v);
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        if (removed[v]) continue;
        removed[v] = 1;
        for (Vertex w : g.neighbors(v))
            if (!removed[w] && --deg[w] <= 1) queue.push_back(w);
    }
    std::vector<Edge> core;
    std::size_t core_vertices = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (removed[v]) continue;
        ++core_vertices;
        for (Vertex w : g.neighbors(v))
            if (v < w && !removed[w]) core.emplace_back(v, w);
    }
    if (core.empty()) return core;
    // A lone cycle leaves a connected 2-regular core.
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v] && deg[v] != 2) throw UnsupportedGraphClass("graph has more than one cycle");
    Vertex start = core.front().u;
    Vertex prev = -1, at = start;
    std::size_t walked = 0;
    do {
        Vertex next = -1;
        for (Vertex w : g.neighbors(at))
            if (!removed[w] && w != prev) {
                next = w;
                break;
            }
        prev = at;
        at = next;
        ++walked;
    } while (at != start && walked <= core_vertices);
    if (walked != core_vertices) throw UnsupportedGraphClass("graph has more than one cycle");
    return core;
}

std::vector<Vertex> cycle_order(const Graph& g) {
    auto core = cycle_edges(g);
    if (core.empty()) throw UnsupportedGraphClass("graph has no cycle");
    std::vector<char> on_cycle(g.order(), 0);
    for (const Edge& e : core) on_cycle[e.u] = on_cycle[e.v] = 1;
    const Vertex start = core.front().u;  // smallest cycle vertex
    std::vector<Vertex> order{start};
    Vertex prev = -1, at = start;
    for (;;) {
        Vertex next = -1;
        for (Vertex w : g.neighbors(at)) {
            if (on_cycle[w] && w != prev) {
                next = w;  // neighbors are sorted, so the first step takes the smaller one
                break;
            }
        }
        if (next == start) break;
        order.push_back(next);
        prev = at;
        at = next;
    }
    return order;
}

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw GraphError("graph6: empty input");
    for (char c : text) {
        if (c < kGraph6Bias || c > 126)
            throw GraphError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) + " outside [63,126]");
    }
    const int n = text[0] - kGraph6Bias;
    if (n > kGraph6MaxShort) throw GraphError("graph6: only the short form (n <= 62) is supported");
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - 1 < bytes) throw GraphError("graph6: truncated bit vector");
    if (text.size() - 1 > bytes) throw GraphError("graph6: trailing bytes after bit vector");

    std::vector<Edge> es;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int chunk = text[1 + k / 6] - kGraph6Bias;
            if (chunk & (1 << (5 - k % 6))) es.emplace_back(i, j);
        }
    }
    for (; k < bytes * 6; ++k) {
        int chunk = text[1 + k / 6] - kGraph6Bias;
        if (chunk & (1 << (5 - k % 6))) throw GraphError("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, es);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxShort) throw GraphError("graph6: only the short form (n <= 62) is supported");
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(0));
    out[0] = static_cast<char>(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) out[1 + k / 6] |= static_cast<char>(1 << (5 - k % 6));
    for (char& c : out) c = static_cast<char>(c + kGraph6Bias);
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<Edge> es;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long> values;
        long x = 0;
        while (fields >> x) values.push_back(x);
        if (!fields.eof()) throw GraphError("edge list: unparsable line " + std::to_string(line_no));
        if (values.empty()) continue;
        if (n < 0) {
            if (values.size() != 1 || values[0] < 0)
                throw GraphError("edge list: first line must hold the vertex count");
            n = static_cast<int>(values[0]);
        } else {
            if (values.size() != 2) throw GraphError("edge list: expected 'u v' on line " + std::to_string(line_no));
            es.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
        }
    }
    if (n < 0) throw GraphError("edge list: missing vertex count");
    return Graph::from_edges(n, es);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

}  // namespace sombor
