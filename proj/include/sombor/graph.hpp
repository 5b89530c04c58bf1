#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sombor {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation restricted to trees / unicyclic graphs gets something else.
class UnsupportedGraphClass : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..order()-1.
///
/// Values are immutable once built; every mutation in the library returns a
/// fresh Graph. Neighbor lists are kept sorted.
class Graph {
public:
    Graph() = default;

    /// Rejects loops, duplicate edges and labels outside [0, n).
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const { return edge_count_; }

    int degree(Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    bool has_edge(Vertex a, Vertex b) const;

    /// All edges in ascending (u, v) order.
    std::vector<Edge> edges() const;

    std::vector<int> degree_sequence() const;

    /// Copy with vertex v relabeled to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    Graph without_edge(Edge e) const;
    /// Copy with every edge incident to the given vertices removed; labels are kept.
    Graph isolating(std::span<const Vertex> vs) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_unicyclic(const Graph& g);

/// Sorted cycle edges of a graph with at most one cycle; empty for forests.
/// Throws UnsupportedGraphClass when the cyclomatic number exceeds one.
std::vector<Edge> cycle_edges(const Graph& g);

/// Vertices of the unique cycle in walking order, starting at the smallest
/// cycle vertex and stepping first to its smaller cycle neighbor.
std::vector<Vertex> cycle_order(const Graph& g);

/// graph6, short form only (n <= 62).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "n" on the first line followed by one "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace sombor
